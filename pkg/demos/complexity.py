"""Count additions per trellis step for both decoders as the code grows."""
import math

from simplexviterbi.channel_bench import complexity_csv, complexity_table, loglog_slope

rows = complexity_table(ks=(1, 2), deltas=range(2, 9))
print(complexity_csv(rows))

for k in (1, 2):
    sub = [r for r in rows if r.k == k]
    slope = loglog_slope([r.n * math.log2(r.n) for r in sub], [r.improved_step_additions for r in sub])
    print(f"k={k}: fast decoder grows like (n log n)^{slope:.2f} per step; "
          f"ratio to classic falls from {sub[0].ratio:.3f} to {sub[-1].ratio:.4f}")

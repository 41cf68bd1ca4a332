"""Monte Carlo over a binary symmetric channel at a few flip rates."""
from simplexviterbi.channel_bench import run_bench

for p in (0.1, 0.2, 0.25, 0.3):
    rep = run_bench(k=1, delta=3, L=50, trials=40, p=p, seed=2024)
    c, f = rep.decoders["classic"], rep.decoders["improved"]
    print(f"p={p:<5} BER={c.ber:.4f} BLER={c.bler:.3f} agree={rep.agreements}/40 "
          f"wall classic={c.wall_ns / 1e6:.0f} ms fast={f.wall_ns / 1e6:.0f} ms")

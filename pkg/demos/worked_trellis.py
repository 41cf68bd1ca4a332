"""Decode the (4,1,2) example word with the classic trellis and print the survivor metrics."""
from simplexviterbi.trellis import INF
from simplexviterbi import PolyCodeword, partial_simplex_conv_generator, viterbi_decode

G = partial_simplex_conv_generator(1, 2)
for i, C in enumerate(G.coeffs):
    print(f"G_{i} = {C.to_text().strip()}")

# a codeword with three bits flipped
r = PolyCodeword.from_strings(["1111", "0101", "0100", "1010", "1111", "0011"])
res = viterbi_decode(r, G)

for t, metrics in enumerate(res.table.metrics):
    shown = " ".join("-" if m >= INF else str(m) for m in metrics)  # "-" marks an unreachable state
    print(f"t={t}: state metrics {shown}")

print("decoded codeword:", res.codeword)
print("message:", " ".join(str(b) for b in res.message.blocks))
print("metric:", res.metric)

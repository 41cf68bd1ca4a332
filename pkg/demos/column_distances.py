"""Brute-force column distances against the closed form for small codes."""
from simplexviterbi.convolutional import column_distance, optimal_column_distance, partial_simplex_conv_generator

for k, delta in [(1, 1), (1, 2), (1, 3), (2, 2), (3, 1)]:
    G = partial_simplex_conv_generator(k, delta)
    got = [column_distance(G, j) for j in range(delta // k + 3)]
    want = [optimal_column_distance(k, delta, j) for j in range(delta // k + 3)]
    print(f"k={k} delta={delta} n={G.n}: {got} {'ok' if got == want else 'MISMATCH ' + str(want)}")

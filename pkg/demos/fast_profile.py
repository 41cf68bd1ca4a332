"""Branch distances from one received block, once by brute force and once through the FWHT."""
import numpy as np

from simplexviterbi import BipolarVector, branch_distance_profile, partial_simplex_generator
from simplexviterbi.hadamard import build_Q, fwht

k, delta = 2, 2
S = partial_simplex_generator(k, delta).generator
print(S.to_text())

rng = np.random.default_rng(1)
r = rng.integers(0, 2, S.ncols)

# every codeword b.S, b running over (delta+k)-bit tuples in lexicographic order
tuples = (np.arange(1 << S.nrows)[:, None] >> np.arange(S.nrows)[::-1]) & 1
words = tuples @ S.to_array() % 2
slow = (words != r).sum(axis=1)

fast = branch_distance_profile(BipolarVector(2 * r - 1), k, delta)
print("brute force:", slow.tolist())
print("transform:  ", fast.tolist())
assert (slow == fast).all()

print("Q for (1, 2):", (build_Q(1, 2).forward + 1).tolist())
print("fwht(-1, 1, -1, -1) =", fwht([-1, 1, -1, -1]).tolist())

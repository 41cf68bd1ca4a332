"""Sylvester Hadamard matrices, the shuffle-and-butterfly transform, and the
per-step branch distance profile of a k-partial simplex code.

Signed matrices are plain ``int64`` numpy arrays.  Everything here is exact
integer arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .block_codes import combo_lex_rank, enumerate_codewords, partial_simplex_generator
from .f2core import BipolarVector, DimensionError
from .opcount import OpCount

MAX_DENSE_ORDER = 12


@dataclass(frozen=True, eq=False)
class PermutationMap:
    """``apply(x)[i] == x[forward[i]]``; as a matrix, row ``i`` is ``e_{forward[i]}``."""

    forward: np.ndarray

    def __post_init__(self):
        fwd = np.asarray(self.forward, dtype=np.intp).ravel()
        if not np.array_equal(np.sort(fwd), np.arange(fwd.size)):
            raise ValueError("forward map is not a bijection")
        fwd.setflags(write=False)
        object.__setattr__(self, "forward", fwd)

    @property
    def size(self) -> int:
        return self.forward.size

    def apply(self, x):
        return np.asarray(x)[self.forward]

    def compose(self, other: "PermutationMap") -> "PermutationMap":
        """Matrix product ``self @ other``: apply ``other`` first."""
        return PermutationMap(other.forward[self.forward])

    def matrix(self) -> np.ndarray:
        M = np.zeros((self.size, self.size), dtype=np.int64)
        M[np.arange(self.size), self.forward] = 1
        return M

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.forward, np.arange(self.size)))

    def __eq__(self, other) -> bool:
        return isinstance(other, PermutationMap) and np.array_equal(self.forward, other.forward)


def hadamard_matrix(m: int) -> np.ndarray:
    if not 0 <= m <= MAX_DENSE_ORDER:
        raise OverflowError(f"refusing to materialize H of order 2^{m}")
    H = np.ones((1, 1), dtype=np.int64)
    for _ in range(m):
        H = np.block([[H, H], [H, -H]])
    return H


def faro_out_shuffle(L: int) -> PermutationMap:
    """Riffle the two halves together, first element staying in front."""
    if L < 2 or L % 2:
        raise ValueError(f"shuffle size must be even and positive, got {L}")
    half = L // 2
    fwd = np.empty(L, dtype=np.intp)
    fwd[0::2] = np.arange(half)
    fwd[1::2] = np.arange(half, L)
    return PermutationMap(fwd)


def _log2_exact(L: int) -> int:
    if L < 1 or L & (L - 1):
        raise DimensionError(f"length {L} is not a power of two")
    return L.bit_length() - 1


def fwht(x, counter: OpCount | None = None) -> np.ndarray:
    """``H_{2^m} x`` as ``m`` rounds of shuffle followed by the 2x2 butterfly."""
    x = np.asarray(x, dtype=np.int64)
    L = x.size
    m = _log2_exact(L)
    if m == 0:
        return x.copy()
    P = faro_out_shuffle(L).forward
    for _ in range(m):
        pairs = x[P].reshape(-1, 2)
        x = np.stack((pairs[:, 0] + pairs[:, 1], pairs[:, 0] - pairs[:, 1]), axis=1).ravel()
    if counter is not None:
        counter.add(m * L)
    return x


def shuffle_butterfly_matrix(m: int) -> np.ndarray:
    """Explicit product ``(C P)^m`` with C block-diagonal in ``H_2``."""
    L = 1 << m
    if m == 0:
        return np.ones((1, 1), dtype=np.int64)
    C = np.kron(np.eye(L // 2, dtype=np.int64), hadamard_matrix(1))
    CP = C @ faro_out_shuffle(L).matrix()
    return np.linalg.matrix_power(CP, m)


def _check_shuffle_convention(max_m: int = 6) -> None:
    for m in range(max_m + 1):
        if not np.array_equal(shuffle_butterfly_matrix(m), hadamard_matrix(m)):
            raise AssertionError(f"(CP)^{m} != H_{1 << m}: shuffle convention is wrong")


_check_shuffle_convention()


def _check_block(k: int, delta: int, l: int) -> None:
    if k < 1 or delta < 1:
        raise ValueError(f"need k >= 1 and delta >= 1, got k={k}, delta={delta}")
    if not 1 <= l <= k - 1:
        raise ValueError(f"block index l={l} outside 1..{k - 1}")


def build_T(k: int, delta: int, l: int) -> PermutationMap:
    """Stride permutation mapping output ``j*2^l + c`` to input ``c*s + j``, ``s = 2^(k+delta-l-1)``."""
    _check_block(k, delta, l)
    s = 1 << (k + delta - l - 1)
    reps = 1 << l
    j, c = np.divmod(np.arange(s * reps), reps)
    return PermutationMap(c * s + j)


def _sign_stack(l: int) -> np.ndarray:
    half = 1 << (l - 1)
    return np.array([-1] * half + [1] * half, dtype=np.int64)


def build_Hhat(k: int, delta: int, l: int) -> np.ndarray:
    _check_block(k, delta, l)
    H = hadamard_matrix(k + delta - l - 1)
    stacked = np.concatenate([sgn * H for sgn in _sign_stack(l)])
    return build_T(k, delta, l).apply(stacked)


def build_Htilde(k: int, delta: int) -> np.ndarray:
    """Bipolar images of all codewords of S(delta+k)_k, in enumeration order."""
    m = delta + k - 1
    if m > MAX_DENSE_ORDER:
        raise OverflowError("H-tilde too large to materialize")
    H = hadamard_matrix(m)
    left = np.vstack([H, -H])
    blocks = [build_Hhat(k, delta, l) for l in range(1, k)]
    right = [np.vstack([B, B]) for B in blocks]
    return np.hstack([left] + right)


def build_Q(k: int, delta: int) -> PermutationMap:
    """Reindex enumeration order to lexicographic branch-tuple order.

    Row ``i`` in the first half picks the rank of the row subset that
    produced enumerated word ``i``; row ``i`` of the second half takes the
    pick of row ``i - 2^m`` shifted down by ``2^m``.
    """
    dim = delta + k
    half = 1 << (dim - 1)
    combos = _enumeration_combos(k, delta)
    fwd = np.empty(2 * half, dtype=np.intp)
    for i in range(half):
        fwd[i] = combo_lex_rank(combos[i], dim) - 1
    fwd[half:] = fwd[:half] - half
    return PermutationMap(fwd)


@lru_cache(maxsize=None)
def _enumeration_combos(k: int, delta: int) -> tuple:
    return enumerate_codewords(partial_simplex_generator(k, delta)).combos


@dataclass(frozen=True, eq=False)
class _ProfilePlan:
    k: int
    delta: int
    n: int
    offsets: tuple  # (start, length) of r^(m), r^(m-1), ..., r^(delta)
    T: tuple  # index arrays for l = 1..k-1
    signs: tuple  # sign stacks for l = 1..k-1
    Q: np.ndarray


@lru_cache(maxsize=None)
def _plan(k: int, delta: int) -> _ProfilePlan:
    m = delta + k - 1
    offsets = []
    start = 0
    for l in range(k):
        size = 1 << (m - l)
        offsets.append((start, size))
        start += size
    return _ProfilePlan(
        k=k,
        delta=delta,
        n=start,
        offsets=tuple(offsets),
        T=tuple(build_T(k, delta, l).forward for l in range(1, k)),
        signs=tuple(_sign_stack(l) for l in range(1, k)),
        Q=build_Q(k, delta).forward,
    )


def branch_distance_profile(r, k: int, delta: int, counter: OpCount | None = None) -> np.ndarray:
    """Distances from one received block to every branch codeword.

    ``r`` is a bipolar block of length ``n = 2^(delta+k) - 2^delta``.  Entry
    ``b`` of the result is the Hamming distance to ``b . S(delta+k)_k`` where
    ``b`` is read as a (delta+k)-bit tuple, first component most significant.
    """
    plan = _plan(k, delta)
    vals = r.vals if isinstance(r, BipolarVector) else np.asarray(r)
    vals = vals.astype(np.int64, copy=False)
    if vals.size != plan.n:
        raise DimensionError(f"received block has length {vals.size}, expected {plan.n}")

    start, size = plan.offsets[0]
    w0 = fwht(vals[start:start + size], counter)
    shared = None
    for (start, size), T, signs in zip(plan.offsets[1:], plan.T, plan.signs):
        w = fwht(vals[start:start + size], counter)
        part = (signs[:, None] * w[None, :]).ravel()[T]
        if shared is None:
            shared = part
        else:
            shared = shared + part
            if counter is not None:
                counter.add(part.size)
    if shared is None:
        ips = np.concatenate([w0, -w0])
    else:
        ips = np.concatenate([shared + w0, shared - w0])
        if counter is not None:
            counter.add(2 * w0.size)
    ips = ips[plan.Q]
    if counter is not None:
        counter.add(ips.size)
    return (plan.n - ips) // 2

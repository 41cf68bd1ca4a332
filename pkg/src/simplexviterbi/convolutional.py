"""Polynomial generator matrices of k-partial simplex convolutional codes,
zero-tail encoding, and brute-force column distances."""
from __future__ import annotations

import itertools
from dataclasses import dataclass

from .block_codes import CodeParameterError, partial_simplex_generator
from .f2core import BinaryMatrix, BinaryVector, DimensionError, ResourceError, f2_matvec, weight

MAX_ENUMERATION_BITS = 16  # input-prefix bits k*(j+1) that column_distance will enumerate


@dataclass(frozen=True)
class PolyGeneratorMatrix:
    """``G(z) = G_0 + G_1 z + ... + G_mu z^mu`` with each ``G_i`` a k x n matrix."""

    coeffs: tuple  # of BinaryMatrix
    k: int
    n: int
    delta: int
    mu: int

    def __post_init__(self):
        if len(self.coeffs) != self.mu + 1:
            raise DimensionError("need mu + 1 coefficient matrices")
        for G in self.coeffs:
            if G.shape != (self.k, self.n):
                raise DimensionError(f"coefficient shape {G.shape}, expected {(self.k, self.n)}")

    @property
    def gtilde_rows(self) -> int:
        return self.delta + self.k - self.k * self.mu

    def stacked(self) -> BinaryMatrix:
        """``(G_0; ...; G_{mu-1}; G~_mu)``, the (delta+k) x n block generator."""
        rows = []
        for G in self.coeffs[:-1]:
            rows.extend(G.rows)
        rows.extend(self.coeffs[-1].rows[: self.gtilde_rows])
        return BinaryMatrix(tuple(rows), self.n)


@dataclass(frozen=True)
class MessageSequence:
    blocks: tuple  # of BinaryVector, each of length k

    @property
    def L(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_strings(cls, blocks) -> "MessageSequence":
        return cls(tuple(BinaryVector.from_string(b) for b in blocks))


@dataclass(frozen=True)
class PolyCodeword:
    blocks: tuple  # of BinaryVector, each of length n

    def __len__(self) -> int:
        return len(self.blocks)

    @classmethod
    def from_strings(cls, blocks) -> "PolyCodeword":
        return cls(tuple(BinaryVector.from_string(b) for b in blocks))

    def weight(self) -> int:
        return sum(weight(b) for b in self.blocks)

    def distance(self, other: "PolyCodeword") -> int:
        if len(self) != len(other):
            raise DimensionError("block counts differ")
        return sum(weight(a ^ b) for a, b in zip(self.blocks, other.blocks))

    def flat_bits(self) -> BinaryVector:
        bits, n = 0, 0
        for b in self.blocks:
            bits |= b.bits << n
            n += b.length
        return BinaryVector(bits, n)

    def __str__(self) -> str:
        return ",".join(f"({b})" for b in self.blocks)


def partial_simplex_conv_generator(k: int, delta: int) -> PolyGeneratorMatrix:
    S = partial_simplex_generator(k, delta).generator
    mu = -(-delta // k)
    n = S.ncols
    coeffs = []
    for i in range(mu + 1):
        rows = S.rows[i * k:(i + 1) * k]
        rows = rows + (0,) * (k - len(rows))
        coeffs.append(BinaryMatrix(rows, n))
    G = PolyGeneratorMatrix(tuple(coeffs), k, n, delta, mu)
    if G.stacked() != S:
        raise AssertionError("stacked coefficients do not reproduce S(delta+k)_k")
    if any(coeffs[-1].rows[G.gtilde_rows:]):
        raise AssertionError("trailing rows of G_mu must be zero")
    if sum(row_degrees(G)) != delta:
        raise AssertionError("row degrees do not sum to delta")
    return G


def row_degrees(G: PolyGeneratorMatrix) -> list[int]:
    degrees = []
    for i in range(G.k):
        nonzero = [d for d, C in enumerate(G.coeffs) if C.rows[i]]
        degrees.append(max(nonzero) if nonzero else 0)
    return degrees


def encode(u: MessageSequence, G: PolyGeneratorMatrix) -> PolyCodeword:
    """Zero-tail encoding: ``mu`` zero blocks are appended before multiplying by ``G(z)``."""
    for t, b in enumerate(u.blocks):
        if b.length != G.k:
            raise DimensionError(f"message block {t} has length {b.length}, expected {G.k}")
    padded = list(u.blocks) + [BinaryVector.zeros(G.k)] * G.mu
    out = []
    for t in range(len(padded)):
        acc = 0
        for i in range(min(t, G.mu) + 1):
            acc ^= f2_matvec(padded[t - i], G.coeffs[i]).bits
        out.append(BinaryVector(acc, G.n))
    return PolyCodeword(tuple(out))


def optimal_column_distance(k: int, delta: int, j: int) -> int:
    """Closed-form column distance of the k-partial simplex convolutional code."""
    n = (1 << delta) * ((1 << k) - 1)
    return (1 << delta) * (1 << (k - 1)) + min(j, delta // k) * (n // 2)


def column_distance(G: PolyGeneratorMatrix, j: int) -> int:
    """Minimum weight of ``v_[0,j]`` over all inputs with ``u_0 != 0``, by exhaustion."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if G.coeffs[0].rank() != G.k:
        raise CodeParameterError("G_0 is not injective; u_0 != 0 does not imply v_0 != 0")
    if G.k * (j + 1) > MAX_ENUMERATION_BITS:
        raise ResourceError(f"2^{G.k * (j + 1)} input prefixes is too many to enumerate")
    inputs = [BinaryVector(x, G.k) for x in range(1 << G.k)]
    best = None
    for head in inputs[1:]:
        for rest in itertools.product(inputs, repeat=j):
            v = encode(MessageSequence((head,) + rest), G)
            w = sum(weight(b) for b in v.blocks[: j + 1])
            if best is None or w < best:
                best = w
    return best


def free_distance_estimate(G: PolyGeneratorMatrix, J: int) -> int:
    """Column distance at window ``J``; equals d_free once ``J >= floor(delta/k)``."""
    if J < G.delta // G.k:
        raise ValueError(f"window J={J} is below floor(delta/k)={G.delta // G.k}")
    return column_distance(G, J)


def format_blocks(blocks, k: int, n: int, delta: int, mu: int, L: int) -> str:
    """Text form: header ``k n delta mu L`` then one '0'/'1' line per block."""
    lines = [f"{k} {n} {delta} {mu} {L}"]
    lines.extend(str(b) for b in blocks)
    return "\n".join(lines) + "\n"


class BlockFormatError(ValueError):
    pass


def parse_blocks(text: str):
    """Inverse of :func:`format_blocks`; returns ``(header, blocks)``.

    ``header`` is a dict with keys ``k, n, delta, mu, L``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise BlockFormatError("empty block file")
    fields = lines[0].split()
    if len(fields) != 5 or not all(f.isdigit() for f in fields):
        raise BlockFormatError(f"bad header line {lines[0]!r}; expected 'k n delta mu L'")
    header = dict(zip(("k", "n", "delta", "mu", "L"), map(int, fields)))
    blocks = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            blocks.append(BinaryVector.from_string(ln))
        except ValueError as exc:
            raise BlockFormatError(f"line {lineno}: {exc}") from None
    widths = {b.length for b in blocks}
    if len(widths) > 1:
        raise BlockFormatError(f"blocks have mixed widths {sorted(widths)}")
    return header, tuple(blocks)

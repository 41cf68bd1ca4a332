"""Reed-Muller, simplex and k-partial simplex block codes.

Row indices in combos are 1-based (row 1 is the top row), and a tuple
``(x_1, ..., x_dim)`` selecting rows is ranked lexicographically with ``x_1``
as the most significant position.
"""
from __future__ import annotations

from dataclasses import dataclass

from .f2core import BinaryMatrix, BinaryVector


class CodeParameterError(ValueError):
    pass


@dataclass(frozen=True)
class BlockCode:
    generator: BinaryMatrix
    kind: str
    params: tuple

    def __post_init__(self):
        if self.dim > self.length:
            raise CodeParameterError("dimension exceeds length")
        if self.generator.rank() != self.dim:
            raise CodeParameterError("generator is not of full row rank")

    @property
    def dim(self) -> int:
        return self.generator.nrows

    @property
    def length(self) -> int:
        return self.generator.ncols


@dataclass(frozen=True)
class CodewordEnumeration:
    words: tuple  # of BinaryVector
    combos: tuple  # of frozenset of 1-based row indices


def _ones(width: int) -> int:
    return (1 << width) - 1


def _rm_matrix(m: int) -> BinaryMatrix:
    rows = [0b11, 0b10]  # (1 1) and (0 1), position 0 in bit 0
    width = 2
    for _ in range(1, m):
        rows = [r | (r << width) for r in rows] + [_ones(width) << width]
        width *= 2
    return BinaryMatrix(tuple(rows), width)


def reed_muller_generator(m: int) -> BlockCode:
    """Generator of RM(1, m) by the recursion R(m+1) = [R(m) R(m); 0..0 1..1]."""
    if m < 1:
        raise CodeParameterError(f"m must be >= 1, got {m}")
    return BlockCode(_rm_matrix(m), "reed_muller", (m,))


def partial_simplex_generator(k: int, delta: int) -> BlockCode:
    """Generator of the k-partial simplex code S(delta+k)_k in block form.

    Column block ``l`` (``l = 0..k-1``) is ``R(m - l)`` under ``l`` zero rows,
    with ``m = delta + k - 1``.  This column order is the one the fast
    decoder relies on.
    """
    if k < 1 or delta < 1:
        raise CodeParameterError(f"need k >= 1 and delta >= 1, got k={k}, delta={delta}")
    m = delta + k - 1
    G = None
    for l in range(k):
        R = _rm_matrix(m - l)
        block = BinaryMatrix((0,) * l + R.rows, R.ncols)
        G = block if G is None else G.hstack(block)
    return BlockCode(G, "partial_simplex", (k, delta))


def simplex_generator(m: int) -> BlockCode:
    """Simplex generator; column ``c`` is the binary expansion of ``c + 1``, row 1 most significant."""
    if m < 1:
        raise CodeParameterError(f"m must be >= 1, got {m}")
    ncols = (1 << m) - 1
    rows = []
    for i in range(1, m + 1):
        shift = m - i
        rows.append(sum(1 << c for c in range(ncols) if ((c + 1) >> shift) & 1))
    return BlockCode(BinaryMatrix(tuple(rows), ncols), "simplex", (m,))


def enumerate_codewords(code: BlockCode) -> CodewordEnumeration:
    """All codewords in the doubling order used for the Hadamard correspondence.

    Start with row 1; for each further row ``i`` append the words enumerated
    so far XOR row ``i``; finally append every word XOR row 1.
    """
    G = code.generator
    words = [G.rows[0]]
    combos = [frozenset({1})]
    for i in range(2, code.dim + 1):
        row = G.rows[i - 1]
        words += [w ^ row for w in words]
        combos += [c ^ {i} for c in combos]
    words += [w ^ G.rows[0] for w in words]
    combos += [c ^ {1} for c in combos]
    return CodewordEnumeration(
        tuple(BinaryVector(w, G.ncols) for w in words), tuple(combos)
    )


def combo_lex_rank(combo, dim: int) -> int:
    """1-based lexicographic rank of the indicator tuple of ``combo``."""
    if any(not 1 <= j <= dim for j in combo):
        raise CodeParameterError(f"row subset {set(combo)} not within 1..{dim}")
    return sum(1 << (dim - j) for j in combo) + 1


def tuple_to_combo(rank: int, dim: int) -> frozenset:
    """Inverse of :func:`combo_lex_rank` for a 0-based rank."""
    return frozenset(j for j in range(1, dim + 1) if (rank >> (dim - j)) & 1)


def codeword_table(G: BinaryMatrix) -> list[int]:
    """Packed codewords indexed by 0-based lexicographic rank of the selecting tuple."""
    dim = G.nrows
    table = [0] * (1 << dim)
    for rank in range(1, 1 << dim):
        low = rank & -rank
        j = dim - (low.bit_length() - 1)  # row carrying the lowest set bit
        table[rank] = table[rank ^ low] ^ G.rows[j - 1]
    return table

"""Bit-level GF(2) and bipolar primitives.

Binary vectors are packed into a single Python int (position ``i`` lives in
bit ``i``) with the length tracked separately, so XOR and popcount give the
Hamming distance directly.  Bipolar vectors are small signed integers in a
read-only numpy array.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class DimensionError(ValueError):
    """Operands have incompatible lengths or shapes."""


class InvalidInnerProductError(ValueError):
    """An inner product value that no pair of bipolar vectors can produce."""


class ResourceError(RuntimeError):
    """A brute-force enumeration or benchmark exceeds the configured budget."""


@dataclass(frozen=True)
class BinaryVector:
    bits: int
    length: int

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("length must be nonnegative")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits do not fit in the declared length")

    @classmethod
    def zeros(cls, length: int) -> "BinaryVector":
        return cls(0, length)

    @classmethod
    def from_bits(cls, values: Iterable[int]) -> "BinaryVector":
        packed = 0
        length = 0
        for i, b in enumerate(values):
            if b not in (0, 1):
                raise ValueError(f"entry {i} is {b!r}, expected 0 or 1")
            packed |= int(b) << i
            length = i + 1
        return cls(packed, length)

    @classmethod
    def from_string(cls, text: str) -> "BinaryVector":
        """Parse a string of '0'/'1' characters (whitespace ignored)."""
        chars = [c for c in text if not c.isspace()]
        if any(c not in "01" for c in chars):
            raise ValueError(f"not a binary string: {text!r}")
        return cls.from_bits(int(c) for c in chars)

    def __len__(self) -> int:
        return self.length

    def __getitem__(self, i: int) -> int:
        if not -self.length <= i < self.length:
            raise IndexError(i)
        return (self.bits >> (i % self.length)) & 1

    def __iter__(self):
        return (self[i] for i in range(self.length))

    def __xor__(self, other: "BinaryVector") -> "BinaryVector":
        if self.length != other.length:
            raise DimensionError(f"length {self.length} vs {other.length}")
        return BinaryVector(self.bits ^ other.bits, self.length)

    def __str__(self) -> str:
        return "".join(str(b) for b in self)

    def to_array(self) -> np.ndarray:
        return np.fromiter(self, dtype=np.uint8, count=self.length)

    def flip(self, positions: Iterable[int]) -> "BinaryVector":
        mask = 0
        for p in positions:
            if not 0 <= p < self.length:
                raise IndexError(f"bit index {p} out of range for length {self.length}")
            mask ^= 1 << p
        return BinaryVector(self.bits ^ mask, self.length)


@dataclass(frozen=True)
class BinaryMatrix:
    """Row-major GF(2) matrix; each row is a packed int of width ``cols``."""

    rows: tuple
    ncols: int

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        for r in self.rows:
            if r < 0 or r >> self.ncols:
                raise ValueError("row does not fit in the column count")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "BinaryMatrix":
        vecs = [BinaryVector.from_bits(r) for r in rows]
        if not vecs:
            raise ValueError("matrix needs at least one row")
        ncols = vecs[0].length
        if any(v.length != ncols for v in vecs):
            raise DimensionError("ragged rows")
        return cls(tuple(v.bits for v in vecs), ncols)

    @classmethod
    def from_array(cls, arr) -> "BinaryMatrix":
        arr = np.asarray(arr)
        if arr.ndim != 2:
            raise DimensionError("expected a 2-D array")
        return cls.from_rows(arr.tolist())

    @classmethod
    def from_text(cls, text: str) -> "BinaryMatrix":
        """Parse one row per line of '0'/'1' characters."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        return cls.from_rows([[int(c) for c in BinaryVector.from_string(ln)] for ln in lines])

    def to_text(self) -> str:
        return "\n".join(str(self.row(i)) for i in range(self.nrows)) + "\n"

    def row(self, i: int) -> BinaryVector:
        return BinaryVector(self.rows[i], self.ncols)

    def to_array(self) -> np.ndarray:
        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.rows):
            out[i] = self.row(i).to_array()
        return out

    def hstack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.nrows != other.nrows:
            raise DimensionError("row counts differ")
        return BinaryMatrix(
            tuple(a | (b << self.ncols) for a, b in zip(self.rows, other.rows)),
            self.ncols + other.ncols,
        )

    def vstack(self, other: "BinaryMatrix") -> "BinaryMatrix":
        if self.ncols != other.ncols:
            raise DimensionError("column counts differ")
        return BinaryMatrix(self.rows + other.rows, self.ncols)

    def column(self, j: int) -> BinaryVector:
        return BinaryVector.from_bits((r >> j) & 1 for r in self.rows)

    def rank(self) -> int:
        """Rank over GF(2) by Gaussian elimination on the packed rows."""
        pivots: dict[int, int] = {}
        rank = 0
        for r in self.rows:
            while r:
                top = r.bit_length() - 1
                if top in pivots:
                    r ^= pivots[top]
                else:
                    pivots[top] = r
                    rank += 1
                    break
        return rank


@dataclass(frozen=True, eq=False)
class BipolarVector:
    vals: np.ndarray

    def __post_init__(self):
        arr = np.array(self.vals, dtype=np.int8).ravel()
        if not np.all((arr == 1) | (arr == -1)):
            raise ValueError("bipolar entries must be -1 or +1")
        arr.setflags(write=False)
        object.__setattr__(self, "vals", arr)

    def __len__(self) -> int:
        return self.vals.size

    def __eq__(self, other) -> bool:
        return isinstance(other, BipolarVector) and np.array_equal(self.vals, other.vals)

    def __neg__(self) -> "BipolarVector":
        return BipolarVector(-self.vals)

    def __repr__(self) -> str:
        return f"BipolarVector({self.vals.tolist()})"


def weight(v: BinaryVector) -> int:
    return v.bits.bit_count()


def hamming_distance(a: BinaryVector, b: BinaryVector) -> int:
    if a.length != b.length:
        raise DimensionError(f"length {a.length} vs {b.length}")
    return (a.bits ^ b.bits).bit_count()


def to_bipolar(v: BinaryVector) -> BipolarVector:
    """Map 0 -> -1 and 1 -> +1."""
    return BipolarVector(2 * v.to_array().astype(np.int8) - 1)


def from_bipolar(v: BipolarVector) -> BinaryVector:
    return BinaryVector.from_bits(((v.vals + 1) // 2).tolist())


def inner_product(a: BipolarVector, b: BipolarVector) -> int:
    if len(a) != len(b):
        raise DimensionError(f"length {len(a)} vs {len(b)}")
    return int(np.dot(a.vals.astype(np.int64), b.vals.astype(np.int64)))


def distance_from_inner_product(n: int, ip: int) -> int:
    """Hamming distance between two length-``n`` words with bipolar inner product ``ip``."""
    if abs(ip) > n or (n - ip) % 2:
        raise InvalidInnerProductError(f"inner product {ip} impossible for length {n}")
    return (n - ip) // 2


def f2_matvec(u: BinaryVector, M: BinaryMatrix) -> BinaryVector:
    """Row vector times matrix over GF(2): XOR of the rows selected by ``u``."""
    if u.length != M.nrows:
        raise DimensionError(f"vector length {u.length} vs {M.nrows} rows")
    acc = 0
    bits = u.bits
    i = 0
    while bits:
        if bits & 1:
            acc ^= M.rows[i]
        bits >>= 1
        i += 1
    return BinaryVector(acc, M.ncols)

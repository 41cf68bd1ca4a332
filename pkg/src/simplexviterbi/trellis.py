"""Trellis decoding of k-partial simplex convolutional codes.

States carry ``delta`` bits: ``(u_{t-1}, ..., u_{t-mu+1}, first bits of
u_{t-mu})`` read as an integer with the first component most significant.
A branch into time ``t`` is the ``(delta+k)``-bit tuple ``b = (u_{t-1},
S_{t-1})``; its predecessor state is the low ``delta`` bits of ``b``, its
successor the high ``delta`` bits, and its output block is ``b . S(delta+k)_k``.
Both decoders below walk the branches in increasing ``b``.
"""
from __future__ import annotations

import enum
from functools import lru_cache
from dataclasses import dataclass, field

import numpy as np

from .block_codes import codeword_table, partial_simplex_generator
from .convolutional import MessageSequence, PolyCodeword, PolyGeneratorMatrix
from .f2core import BinaryVector, BipolarVector, DimensionError, from_bipolar
from .hadamard import branch_distance_profile
from .opcount import OpCount

INF = np.iinfo(np.int64).max // 4


class TieRule(enum.Enum):
    LOWEST_BRANCH_RANK = "lowest"
    RANDOM = "random"


class UnsupportedCodeError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TrellisConfig:
    k: int
    delta: int
    mu: int
    n: int
    outputs: tuple  # packed output block per branch rank
    output_bits: np.ndarray  # same, as a (2^(delta+k), n) 0/1 array

    @classmethod
    def from_generator(cls, G: PolyGeneratorMatrix) -> "TrellisConfig":
        return _config_for(G)

    @property
    def state_count(self) -> int:
        return 1 << self.delta

    @property
    def branch_count(self) -> int:
        return 1 << (self.delta + self.k)


@lru_cache(maxsize=32)
def _config_for(G: PolyGeneratorMatrix) -> TrellisConfig:
    table = codeword_table(G.stacked())
    nbytes = (G.n + 7) // 8
    raw = b"".join(c.to_bytes(nbytes, "little") for c in table)
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")
    bits = bits.reshape(len(table), nbytes * 8)[:, : G.n].copy()
    bits.setflags(write=False)
    return TrellisConfig(G.k, G.delta, G.mu, G.n, tuple(table), bits)


def block_to_int(block: BinaryVector) -> int:
    """First component becomes the most significant bit."""
    return sum(bit << (block.length - 1 - i) for i, bit in enumerate(block))


def int_to_block(value: int, width: int) -> BinaryVector:
    return BinaryVector.from_bits((value >> (width - 1 - i)) & 1 for i in range(width))


def _state_int(state, delta: int) -> int:
    if isinstance(state, str):
        if len(state) != delta:
            raise ValueError(f"state {state!r} must have {delta} bits")
        return int(state, 2)
    if isinstance(state, BinaryVector):
        return block_to_int(state)
    return int(state)


def branch_output(state, u, G: PolyGeneratorMatrix) -> BinaryVector:
    """Output block on the edge leaving ``state`` with input block ``u``.

    ``state`` may be a bit string such as ``"10"``, a BinaryVector or an int.
    """
    s = _state_int(state, G.delta)
    x = block_to_int(u) if isinstance(u, BinaryVector) else int(u)
    if not 0 <= s < (1 << G.delta) or not 0 <= x < (1 << G.k):
        raise ValueError("state or input out of range")
    return BinaryVector(_config_for(G).outputs[(x << G.delta) | s], G.n)


@dataclass
class SurvivorTable:
    """Per-time survivor bookkeeping.

    ``metrics[t][s]`` is the best metric of a path ending in state ``s`` at
    time ``t`` (``INF`` if unreachable); ``branches[t][s]`` for ``t >= 1`` is
    the rank of the surviving branch into ``s``.
    """

    config: TrellisConfig
    metrics: list = field(default_factory=list)
    branches: list = field(default_factory=list)

    def predecessor(self, t: int, s: int) -> int:
        return int(self.branches[t][s]) & (self.config.state_count - 1)

    def input_block(self, t: int, s: int) -> BinaryVector:
        return int_to_block(int(self.branches[t][s]) >> self.config.delta, self.config.k)

    def active(self, t: int) -> np.ndarray:
        return self.metrics[t] < INF


@dataclass
class DecodeResult:
    codeword: PolyCodeword
    message: MessageSequence
    inputs: MessageSequence  # message followed by the mu zero tail blocks
    metric: int
    op_count: OpCount
    table: SurvivorTable | None = None


def _acs(cfg: TrellisConfig, prev: np.ndarray, bm: np.ndarray, tie: TieRule, rng, counter: OpCount):
    """Add-compare-select over all branch ranks; ``bm`` holds INF for dead branches."""
    mask = cfg.state_count - 1
    ranks = np.arange(cfg.branch_count)
    from_metric = prev[ranks & mask]
    live = (from_metric < INF) & (bm < INF)
    cand = np.where(live, from_metric + np.where(live, bm, 0), INF).reshape(cfg.state_count, -1)
    per_state = live.reshape(cfg.state_count, -1).sum(axis=1)
    counter.add(int(live.sum()))
    counter.compare(int(np.maximum(per_state - 1, 0).sum()))

    if tie is TieRule.LOWEST_BRANCH_RANK:
        choice = np.argmin(cand, axis=1)
    else:
        choice = np.empty(cfg.state_count, dtype=np.intp)
        for s, row in enumerate(cand):
            best = np.flatnonzero(row == row.min())
            choice[s] = best[rng.integers(best.size)] if best.size > 1 else best[0]
    new = cand[np.arange(cfg.state_count), choice]
    branches = (np.arange(cfg.state_count) << cfg.k) | choice
    return new, branches


def _candidates(cfg: TrellisConfig, prev: np.ndarray, inputs_free: bool) -> np.ndarray:
    ranks = np.arange(cfg.branch_count)
    ok = prev[ranks & (cfg.state_count - 1)] < INF
    if not inputs_free:
        ok &= (ranks >> cfg.delta) == 0
    return ok


def _direct_metrics(cfg: TrellisConfig, r_bits: np.ndarray, ok: np.ndarray, counter: OpCount) -> np.ndarray:
    bm = np.full(cfg.branch_count, INF, dtype=np.int64)
    idx = np.flatnonzero(ok)
    bm[idx] = (cfg.output_bits[idx] != r_bits).sum(axis=1)
    counter.add(idx.size * cfg.n)
    return bm


def _run(cfg: TrellisConfig, received_bits: np.ndarray, profile_fn, tie: TieRule, seed) -> tuple:
    """Shared trellis sweep; ``profile_fn(t)`` supplies full-step metrics or None."""
    steps = received_bits.shape[0]  # N + 1
    L = steps - cfg.mu
    counter = OpCount()
    rng = np.random.default_rng(seed)
    table = SurvivorTable(cfg, branches=[None])
    metrics = np.full(cfg.state_count, INF, dtype=np.int64)
    metrics[0] = 0
    table.metrics.append(metrics)
    for t in range(1, steps + 1):
        full = cfg.mu + 1 <= t <= L
        counter.begin_step(t, full)
        bm = profile_fn(t, counter) if full else None
        if bm is None:
            ok = _candidates(cfg, metrics, inputs_free=t <= L)
            bm = _direct_metrics(cfg, received_bits[t - 1], ok, counter)
        metrics, branches = _acs(cfg, metrics, bm, tie, rng, counter)
        table.metrics.append(metrics)
        table.branches.append(branches)
    return table, counter, L


def traceback(table: SurvivorTable, L: int | None = None, counter: OpCount | None = None) -> DecodeResult:
    """Follow survivors back from the zero state at the last time."""
    cfg = table.config
    last = len(table.metrics) - 1
    if L is None:
        L = last - cfg.mu
    if table.metrics[last][0] >= INF:
        raise RuntimeError("no surviving path ends in the zero state")
    s = 0
    ranks = []
    for t in range(last, 0, -1):
        b = int(table.branches[t][s])
        ranks.append(b)
        s = b & (cfg.state_count - 1)
    ranks.reverse()
    inputs = tuple(int_to_block(b >> cfg.delta, cfg.k) for b in ranks)
    blocks = tuple(BinaryVector(cfg.outputs[b], cfg.n) for b in ranks)
    return DecodeResult(
        codeword=PolyCodeword(blocks),
        message=MessageSequence(inputs[:L]),
        inputs=MessageSequence(inputs),
        metric=int(table.metrics[last][0]),
        op_count=counter if counter is not None else OpCount(),
        table=table,
    )


def _check_shape(steps: int, n: int, cfg: TrellisConfig) -> None:
    if n != cfg.n:
        raise DimensionError(f"received blocks have length {n}, expected {cfg.n}")
    if steps < cfg.mu + 1:
        raise DimensionError(f"need at least mu + 1 = {cfg.mu + 1} received blocks, got {steps}")


def _binary_rows(r) -> np.ndarray:
    if isinstance(r, PolyCodeword):
        r = r.blocks
    rows = [b.to_array() if isinstance(b, BinaryVector) else np.asarray(b, dtype=np.uint8) for b in r]
    lengths = {row.size for row in rows}
    if len(lengths) > 1:
        raise DimensionError("received blocks have mixed lengths")
    return np.array(rows, dtype=np.uint8).reshape(len(rows), -1)


def _bipolar_rows(r) -> np.ndarray:
    rows = [b.vals if isinstance(b, BipolarVector) else BipolarVector(b).vals for b in r]
    lengths = {row.size for row in rows}
    if len(lengths) > 1:
        raise DimensionError("received blocks have mixed lengths")
    return np.array(rows, dtype=np.int64).reshape(len(rows), -1)


def viterbi_decode(r, G: PolyGeneratorMatrix, tie: TieRule = TieRule.LOWEST_BRANCH_RANK, seed=None) -> DecodeResult:
    """Hard-decision maximum-likelihood decoding of zero-tail terminated words.

    ``r`` is a PolyCodeword or a sequence of BinaryVector / 0-1 arrays with
    ``L + mu`` blocks.  Every step computes each needed branch metric bit by bit.
    """
    cfg = TrellisConfig.from_generator(G)
    bits = _binary_rows(r)
    _check_shape(bits.shape[0], bits.shape[1], cfg)
    table, counter, L = _run(cfg, bits, lambda t, c: None, tie, seed)
    return traceback(table, L, counter)


def _require_partial_simplex(G: PolyGeneratorMatrix) -> None:
    try:
        S = partial_simplex_generator(G.k, G.delta).generator
    except ValueError as exc:
        raise UnsupportedCodeError(str(exc)) from None
    if G.stacked() != S:
        raise UnsupportedCodeError("generator is not a k-partial simplex convolutional code")


def improved_viterbi_decode(r, G: PolyGeneratorMatrix, tie: TieRule = TieRule.LOWEST_BRANCH_RANK, seed=None) -> DecodeResult:
    """Viterbi decoding with all branch metrics of a step from one fast transform.

    ``r`` holds ``L + mu`` bipolar blocks.  Steps ``mu+1 .. L`` obtain the
    whole branch distance profile from the Hadamard route; the head and the
    zero-input tail use direct metrics over their restricted branch sets.
    """
    _require_partial_simplex(G)
    cfg = TrellisConfig.from_generator(G)
    vals = _bipolar_rows(r)
    _check_shape(vals.shape[0], vals.shape[1], cfg)
    bits = ((vals + 1) // 2).astype(np.uint8)

    def profile(t, counter):
        return branch_distance_profile(vals[t - 1], G.k, G.delta, counter)

    table, counter, L = _run(cfg, bits, profile, tie, seed)
    return traceback(table, L, counter)


def to_bipolar_blocks(r) -> list:
    """Convenience: binary received blocks to the bipolar input of the fast decoder."""
    if isinstance(r, PolyCodeword):
        r = r.blocks
    return [BipolarVector(2 * b.to_array().astype(np.int8) - 1) for b in r]


def from_bipolar_blocks(r) -> PolyCodeword:
    return PolyCodeword(tuple(from_bipolar(b) for b in r))

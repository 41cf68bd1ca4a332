import numpy as np
import pytest

from oracles import EXAMPLE1_C, EXAMPLE1_R, PARAMS, ml_distance
from simplexviterbi.block_codes import partial_simplex_generator
from simplexviterbi.convolutional import (
    MessageSequence,
    PolyCodeword,
    PolyGeneratorMatrix,
    encode,
    partial_simplex_conv_generator,
)
from simplexviterbi.f2core import BinaryMatrix, BinaryVector, DimensionError
from simplexviterbi.trellis import (
    TieRule,
    UnsupportedCodeError,
    branch_output,
    improved_viterbi_decode,
    to_bipolar_blocks,
    traceback,
    viterbi_decode,
)

G12 = partial_simplex_conv_generator(1, 2)


def test_branch_outputs_of_worked_trellis():
    assert str(branch_output("10", BinaryVector.from_string("0"), G12)) == "0101"
    assert str(branch_output("01", BinaryVector.from_string("1"), G12)) == "1100"
    assert str(branch_output("00", BinaryVector.from_string("1"), G12)) == "1111"
    assert branch_output(0, 0, G12) == BinaryVector.zeros(4)


def test_classic_worked_example():
    res = viterbi_decode(PolyCodeword.from_strings(EXAMPLE1_R), G12)
    assert [str(b) for b in res.codeword.blocks] == EXAMPLE1_C
    assert [str(b) for b in res.message.blocks] == ["1", "0", "1", "1"]
    assert [str(b) for b in res.inputs.blocks] == ["1", "0", "1", "1", "0", "0"]
    assert res.metric == 3
    assert res.table.metrics[2].tolist() == [6, 0, 6, 4]
    assert res.table.metrics[3].tolist() == [3, 5, 1, 7]
    # the second of the two incoming paths wins everywhere at t = 3
    assert all(int(b) & 1 for b in res.table.branches[3])
    assert res.table.predecessor(3, 2) == 1  # state 10 reached from 01
    assert str(res.table.input_block(3, 2)) == "1"


def test_improved_worked_example():
    r = PolyCodeword.from_strings(EXAMPLE1_R)
    fast = improved_viterbi_decode(to_bipolar_blocks(r), G12)
    slow = viterbi_decode(r, G12)
    assert fast.codeword == slow.codeword and fast.message == slow.message and fast.metric == 3
    for t in range(len(EXAMPLE1_R) + 1):
        assert np.array_equal(fast.table.metrics[t], slow.table.metrics[t])


def test_improved_uses_profile_only_in_main_loop():
    r = to_bipolar_blocks(PolyCodeword.from_strings(EXAMPLE1_R))
    steps = improved_viterbi_decode(r, G12).op_count.steps
    assert [s.t for s in steps if s.full] == [3, 4]


def test_traceback_on_zero_word():
    G = partial_simplex_conv_generator(2, 2)
    r = PolyCodeword((BinaryVector.zeros(G.n),) * 7)
    res = viterbi_decode(r, G)
    assert res.metric == 0
    assert all(b.bits == 0 for b in res.message.blocks)
    again = traceback(res.table)
    assert again.message == res.message and again.metric == 0


@pytest.mark.parametrize("k, delta", PARAMS)
def test_single_error_corrected(k, delta):
    G = partial_simplex_conv_generator(k, delta)
    rng = np.random.default_rng(k * 10 + delta)
    for _ in range(10):
        u = MessageSequence(tuple(BinaryVector.from_bits(rng.integers(0, 2, k).tolist()) for _ in range(6)))
        c = encode(u, G)
        blk, bit = rng.integers(len(c)), rng.integers(G.n)
        r = PolyCodeword(tuple(b.flip([bit]) if i == blk else b for i, b in enumerate(c.blocks)))
        for res in (viterbi_decode(r, G), improved_viterbi_decode(to_bipolar_blocks(r), G)):
            assert res.message == u and res.metric == 1


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_ml_against_exhaustive_search(L):
    rng = np.random.default_rng(L)
    coeffs = [C.to_array() for C in G12.coeffs]
    for _ in range(25):
        r = rng.integers(0, 2, (L + G12.mu, G12.n))
        blocks = PolyCodeword(tuple(BinaryVector.from_bits(row.tolist()) for row in r))
        res = viterbi_decode(blocks, G12)
        assert res.metric == ml_distance(r, coeffs, L)
        assert res.metric == res.codeword.distance(blocks)
        assert encode(res.message, G12) == res.codeword


@pytest.mark.parametrize("k, delta", PARAMS)
def test_decoders_agree_on_random_words(k, delta):
    G = partial_simplex_conv_generator(k, delta)
    rng = np.random.default_rng(99 + k + 7 * delta)
    for _ in range(30):
        L = int(rng.integers(1, 12))
        r = PolyCodeword(tuple(BinaryVector.from_bits(rng.integers(0, 2, G.n).tolist())
                               for _ in range(L + G.mu)))
        a = viterbi_decode(r, G)
        b = improved_viterbi_decode(to_bipolar_blocks(r), G)
        assert (a.message, a.codeword, a.metric) == (b.message, b.codeword, b.metric)
        assert a.metric == a.codeword.distance(r)


def test_random_tie_rule_is_seeded_and_shared():
    G = partial_simplex_conv_generator(2, 1)
    rng = np.random.default_rng(5)
    for _ in range(20):
        r = PolyCodeword(tuple(BinaryVector.from_bits(rng.integers(0, 2, G.n).tolist()) for _ in range(8)))
        a = viterbi_decode(r, G, tie=TieRule.RANDOM, seed=11)
        b = improved_viterbi_decode(to_bipolar_blocks(r), G, tie=TieRule.RANDOM, seed=11)
        c = viterbi_decode(r, G, tie=TieRule.RANDOM, seed=11)
        assert a.codeword == b.codeword == c.codeword
        assert a.metric == viterbi_decode(r, G).metric


def test_survivor_metrics_never_decrease_along_path():
    G = partial_simplex_conv_generator(2, 2)
    rng = np.random.default_rng(3)
    r = PolyCodeword(tuple(BinaryVector.from_bits(rng.integers(0, 2, G.n).tolist()) for _ in range(10)))
    res = viterbi_decode(r, G)
    s, path = 0, []
    for t in range(len(r), 0, -1):
        path.append(int(res.table.metrics[t][s]))
        s = res.table.predecessor(t, s)
    assert path == sorted(path, reverse=True)


def test_malformed_inputs():
    with pytest.raises(DimensionError):
        viterbi_decode(PolyCodeword.from_strings(["111", "000", "111"]), G12)
    with pytest.raises(DimensionError):
        viterbi_decode(PolyCodeword.from_strings(["1111", "0000"]), G12)


def test_improved_rejects_other_codes():
    C0 = BinaryMatrix.from_rows([[1, 1, 1, 1]])
    C1 = BinaryMatrix.from_rows([[1, 0, 1, 1]])
    C2 = BinaryMatrix.from_rows([[0, 0, 1, 1]])
    G = PolyGeneratorMatrix((C0, C1, C2), k=1, n=4, delta=2, mu=2)
    with pytest.raises(UnsupportedCodeError):
        improved_viterbi_decode(to_bipolar_blocks(PolyCodeword.from_strings(EXAMPLE1_R)), G)
    # the classic decoder handles any generator of this shape
    assert viterbi_decode(PolyCodeword.from_strings(EXAMPLE1_R), G).metric >= 0

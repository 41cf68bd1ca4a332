import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import PARAMS, all_codewords, hadamard_entrywise
from simplexviterbi.block_codes import enumerate_codewords, partial_simplex_generator
from simplexviterbi.f2core import BipolarVector, DimensionError, to_bipolar
from simplexviterbi.hadamard import (
    PermutationMap,
    branch_distance_profile,
    build_Hhat,
    build_Htilde,
    build_Q,
    build_T,
    faro_out_shuffle,
    fwht,
    hadamard_matrix,
    shuffle_butterfly_matrix,
)
from simplexviterbi.opcount import OpCount


def test_hadamard_small():
    assert hadamard_matrix(0).tolist() == [[1]]
    assert hadamard_matrix(1).tolist() == [[1, 1], [1, -1]]
    assert hadamard_matrix(2)[2].tolist() == [1, 1, -1, -1]


@pytest.mark.parametrize("m", range(0, 9))
def test_hadamard_against_entrywise_formula(m):
    H = hadamard_matrix(m)
    assert np.array_equal(H, hadamard_entrywise(m))
    assert np.array_equal(H, H.T)
    assert np.array_equal(H @ H.T, (1 << m) * np.eye(1 << m, dtype=np.int64))


def test_hadamard_too_big():
    with pytest.raises(OverflowError):
        hadamard_matrix(13)


def test_faro_out_shuffle():
    assert faro_out_shuffle(2).is_identity()
    assert faro_out_shuffle(4).apply(list("abcd")).tolist() == list("acbd")
    assert faro_out_shuffle(8).forward.tolist() == [0, 4, 1, 5, 2, 6, 3, 7]
    with pytest.raises(ValueError):
        faro_out_shuffle(5)


@pytest.mark.parametrize("m", range(0, 7))
def test_shuffle_butterfly_product_is_hadamard(m):
    assert np.array_equal(shuffle_butterfly_matrix(m), hadamard_entrywise(m))


def test_fwht_examples():
    assert fwht([-1, 1, -1, -1]).tolist() == [-2, -2, 2, -2]
    assert fwht([1, 1, 1, 1]).tolist() == [4, 0, 0, 0]
    with pytest.raises(DimensionError):
        fwht([1, 2, 3])


def test_fwht_counts_m_times_length_additions():
    c = OpCount()
    fwht(np.ones(32, dtype=np.int64), c)
    assert c.additions == 5 * 32


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10).flatmap(
    lambda m: st.lists(st.integers(-1000, 1000), min_size=1 << m, max_size=1 << m)))
def test_fwht_properties(x):
    x = np.array(x, dtype=np.int64)
    m = x.size.bit_length() - 1
    assert np.array_equal(fwht(x), hadamard_entrywise(m) @ x)
    assert np.array_equal(fwht(fwht(x)), x.size * x)


def test_T_examples():
    H4 = hadamard_matrix(2)
    got = build_T(3, 1, 1).apply(np.vstack([-H4, H4]))
    assert got[:4].tolist() == [[-1, -1, -1, -1], [1, 1, 1, 1], [-1, 1, -1, 1], [1, -1, 1, -1]]
    H2 = hadamard_matrix(1)
    got = build_T(3, 1, 2).apply(np.vstack([-H2, -H2, H2, H2]))
    assert got.tolist() == [[-1, -1], [-1, -1], [1, 1], [1, 1], [-1, 1], [-1, 1], [1, -1], [1, -1]]


@pytest.mark.parametrize("k, delta", [(2, 1), (3, 1), (3, 2), (4, 1), (2, 4)])
def test_T_fixes_first_element(k, delta):
    for l in range(1, k):
        T = build_T(k, delta, l)
        assert T.forward[0] == 0
        assert T.size == 2 ** (k + delta - 1)


def test_T_rejects_bad_block():
    with pytest.raises(ValueError):
        build_T(3, 1, 3)
    with pytest.raises(ValueError):
        build_T(1, 2, 1)


def test_Hhat_examples():
    A = build_Hhat(3, 1, 1)
    assert A.shape == (8, 4)
    assert A[:4].tolist() == [[-1, -1, -1, -1], [1, 1, 1, 1], [-1, 1, -1, 1], [1, -1, 1, -1]]
    B = build_Hhat(3, 1, 2)
    assert B.tolist() == [[-1, -1], [-1, -1], [1, 1], [1, 1], [-1, 1], [-1, 1], [1, -1], [1, -1]]
    for k, delta in [(2, 2), (3, 2), (4, 1)]:
        for l in range(1, k):
            assert (build_Hhat(k, delta, l)[0] == -1).all()


def test_Htilde_small_cases():
    H4 = hadamard_matrix(2)
    assert np.array_equal(build_Htilde(1, 2), np.vstack([H4, -H4]))
    Ht = build_Htilde(3, 1)
    assert Ht.shape == (16, 14)
    assert np.array_equal(Ht[:8, :8], hadamard_matrix(3))


@pytest.mark.parametrize("k, delta", PARAMS + [(2, 3), (3, 2), (4, 1)])
def test_Htilde_equals_enumerated_codewords(k, delta):
    en = enumerate_codewords(partial_simplex_generator(k, delta))
    bip = np.array([to_bipolar(w).vals for w in en.words], dtype=np.int64)
    assert np.array_equal(build_Htilde(k, delta), bip)


def test_Q_example():
    Q = build_Q(1, 2)
    assert (Q.forward + 1).tolist() == [5, 7, 6, 8, 1, 3, 2, 4]
    assert Q.compose(Q).is_identity()
    assert Q.size == 8


@pytest.mark.parametrize("k, delta", PARAMS + [(2, 3), (3, 2), (4, 1)])
def test_Q_reorders_Htilde_lexicographically(k, delta):
    Q = build_Q(k, delta)
    assert Q.compose(Q).is_identity()
    G = partial_simplex_generator(k, delta).generator.to_array()
    lex = 2 * all_codewords(G) - 1
    assert np.array_equal(Q.apply(build_Htilde(k, delta)), lex)


def test_permutation_must_be_bijection():
    with pytest.raises(ValueError):
        PermutationMap([0, 0, 1])


def test_profile_worked_example():
    prof = branch_distance_profile(BipolarVector([-1, 1, -1, -1]), 1, 2)
    assert prof.tolist() == [1, 3, 1, 1, 3, 1, 3, 3]


def test_profile_length_check():
    with pytest.raises(DimensionError):
        branch_distance_profile(BipolarVector([1, 1, 1]), 1, 2)


@pytest.mark.parametrize("k, delta", PARAMS + [(2, 3), (3, 2)])
def test_profile_against_brute_force(k, delta):
    rng = np.random.default_rng(1000 * k + delta)
    words = all_codewords(partial_simplex_generator(k, delta).generator.to_array())
    for _ in range(20):
        r = rng.integers(0, 2, words.shape[1])
        expected = (words != r).sum(axis=1)
        assert branch_distance_profile(BipolarVector(2 * r - 1), k, delta).tolist() == expected.tolist()
    for rank, w in enumerate(words[:8]):
        assert branch_distance_profile(BipolarVector(2 * w - 1), k, delta)[rank] == 0


@pytest.mark.parametrize("k, delta", PARAMS + [(2, 5), (3, 3), (4, 2)])
def test_profile_addition_count_bound(k, delta):
    n = 2 ** (delta + k) - 2 ** delta
    c = OpCount()
    branch_distance_profile(BipolarVector(np.ones(n, dtype=np.int8)), k, delta, c)
    assert c.additions <= 2 * n * np.log2(n) + k * 2 ** (delta + k - 1)

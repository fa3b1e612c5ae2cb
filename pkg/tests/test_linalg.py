import itertools

import numpy as np
import pytest

from cyclrc.cyclic import code_from_zeros, irreducible_code
from cyclrc.gf import field_create, root_of_unity
from cyclrc.linalg import (BudgetExceeded, LinearCode, coordinate_min_weights, dual, matmul, min_weight,
                           rank, rref, weight, weight_distribution)
from oracles import brute_codewords, brute_distribution, brute_min_weight, macwilliams, rank_mod_p

GF2, GF3, GF4, GF13 = (field_create(2), field_create(3), field_create(2, 2), field_create(13))


def random_code(f, n, k, seed):
    rng = np.random.default_rng(seed)
    return LinearCode(f, rng.integers(0, f.order, (k, n)))


def test_rref_identity_and_zero():
    eye = np.eye(5, dtype=np.int64)
    R, r, piv = rref(GF2, eye)
    assert np.array_equal(R, eye) and r == 5 and piv == list(range(5))
    R, r, piv = rref(GF13, np.zeros((3, 4), dtype=np.int64))
    assert r == 0 and not R.any() and piv == []


def test_rref_locality_check_matrix_rank():
    # rows (alpha^(e*i))_i for e = 1, 4, 7, 10 over GF(13), n = 12
    alpha = root_of_unity(GF13, 12).value
    H = np.array([[GF13.power(alpha, e * i) for i in range(12)] for e in (1, 4, 7, 10)])
    assert rref(GF13, H)[1] == 4 == rank_mod_p(H.tolist(), 13)


@pytest.mark.parametrize("seed", range(8))
def test_rref_preserves_row_space(seed):
    rng = np.random.default_rng(seed)
    M = rng.integers(0, 3, (5, 9))
    R, r, piv = rref(GF3, M)
    assert r == rank_mod_p(M.tolist(), 3)
    both = np.concatenate([M, R[:r]])
    assert rank(GF3, both) == r


def test_dual_examples():
    assert dual(code_from_zeros(2, 45, [0, 3, 5, 9]).code).k == 15
    assert dual(code_from_zeros(2, 21, [0, 1, 7]).code).k == 9
    full = LinearCode(GF2, np.eye(6, dtype=np.int64))
    assert dual(full).k == 0 and dual(full).n == 6


@pytest.mark.parametrize("f, n, k, seed", [(GF2, 12, 5, 0), (GF3, 10, 4, 1), (GF4, 9, 3, 2), (GF13, 8, 5, 3)])
def test_dual_orthogonal_and_involutive(f, n, k, seed):
    c = random_code(f, n, k, seed)
    d = c.dual()
    assert d.k == n - c.k
    assert not np.any(matmul(f, c.generator, c.parity_check.T))
    assert d.dual() == c


def test_min_weight_examples():
    assert min_weight(code_from_zeros(2, 27, [1, 9]).code).d == 6
    assert min_weight(code_from_zeros(2, 63, [1, 9, 11, 15, 23]).code).d == 3
    for n in (1, 5, 12):
        assert min_weight(LinearCode(GF3, np.ones((1, n), dtype=np.int64))).d == n


@pytest.mark.parametrize("seed", range(30))
def test_enumeration_and_support_search_agree(seed):
    rng = np.random.default_rng(100 + seed)
    f = [GF2, GF3, GF4][seed % 3]
    n = int(rng.integers(6, 21))
    k = int(rng.integers(1, min(n, 12 if f is GF2 else 8) + 1))
    c = random_code(f, n, k, seed)
    a = min_weight(c, method="enumerate")
    b = min_weight(c, method="support")
    assert a.d == b.d
    assert weight(a.witness) == a.d == weight(b.witness)
    assert c.contains(a.witness) and c.contains(b.witness)
    assert a.d <= n - c.k + 1


@pytest.mark.parametrize("f, n, k, seed", [(GF2, 9, 4, 5), (GF3, 7, 3, 6), (GF4, 6, 3, 7)])
def test_min_weight_matches_brute_force(f, n, k, seed):
    c = random_code(f, n, k, seed)
    assert min_weight(c).d == brute_min_weight(f, c.generator)


@pytest.mark.parametrize("f, n, k, seed", [(GF2, 14, 8, 11), (GF3, 9, 5, 12), (GF4, 8, 4, 13)])
def test_witness_is_lexicographically_first_message(f, n, k, seed):
    c = random_code(f, n, k, seed)
    res = min_weight(c, method="enumerate")
    first = None
    for msg in itertools.product(range(f.order), repeat=c.k):
        w = c.encode(np.array(msg)[None, :])[0]
        if weight(w) == res.d:
            first = w
            break
    assert np.array_equal(res.witness, first)
    for threads in (2, 4):
        again = min_weight(c, method="enumerate", threads=threads)
        assert np.array_equal(again.witness, res.witness)


def test_min_weight_cap_and_budget():
    c = code_from_zeros(2, 27, [1, 9]).code
    capped = min_weight(c, cap=4)
    assert capped.d is None and capped.lower_bound == 5
    assert min_weight(c, cap=6).d == 6
    big = random_code(GF4, 30, 12, 0)
    with pytest.raises(BudgetExceeded):
        min_weight(big, method="enumerate", budget=1000)
    with pytest.raises(BudgetExceeded):
        min_weight(big, budget=10, combination_budget=10)


def test_weight_distribution_examples():
    assert weight_distribution(irreducible_code(2, 7)).counts == {0: 1, 4: 7}
    assert weight_distribution(irreducible_code(3, 40)).counts == {0: 1, 24: 40, 30: 40}
    zero = LinearCode(GF3, np.zeros((0, 5), dtype=np.int64), n=5)
    assert weight_distribution(zero).counts == {0: 1}


@pytest.mark.parametrize("f, n, k, seed", [(GF2, 10, 4, 21), (GF3, 8, 3, 22), (GF4, 7, 3, 23), (GF2, 12, 6, 24)])
def test_distribution_matches_brute_force_and_macwilliams(f, n, k, seed):
    c = random_code(f, n, k, seed)
    dist = weight_distribution(c)
    assert dist.counts == brute_distribution(f, c.generator)
    assert dist.total == f.order**c.k
    assert weight_distribution(c.dual()).counts == macwilliams(dist.counts, n, f.order)


def test_codewords_enumeration_matches_brute_force():
    c = random_code(GF3, 6, 3, 31)
    assert sorted(map(tuple, c.codewords().tolist())) == brute_codewords(GF3, c.generator)


@pytest.mark.parametrize("f, n, k, seed", [(GF2, 10, 5, 41), (GF3, 8, 4, 42)])
def test_coordinate_min_weights(f, n, k, seed):
    c = random_code(f, n, k, seed)
    words = [np.array(w) for w in brute_codewords(f, c.generator)]
    expect = [min((weight(w) for w in words if w[i]), default=0) for i in range(n)]
    for budget in (1 << 27, 1):
        got, wit = coordinate_min_weights(c, budget=budget)
        assert got.tolist() == expect
        for i in range(n):
            if got[i]:
                assert wit[i][i] != 0 and weight(wit[i]) == got[i] and c.contains(wit[i])

from itertools import product

import pytest
from hypothesis import given, strategies as st

from weylprim.errors import InvalidParameterError, RankMismatchError, RankUnderflowError
from weylprim.roots import (
    E_set,
    PositiveRoot,
    RootSum,
    Weight,
    add,
    cartan_matrix,
    dual_twist,
    dual_twist_rootsum,
    in_staircase,
    is_dominant,
    pairing,
    positive_roots,
    restrict_q1,
    subtract_rootsum,
)


def weights(rank, lo=-3, hi=3):
    return st.lists(st.integers(lo, hi), min_size=rank, max_size=rank).map(lambda c: Weight(tuple(c)))


def test_pairing_examples():
    assert pairing(Weight((3, 3, 1, 2)), PositiveRoot.simple(1)) == 3
    assert pairing(Weight.rho(4), PositiveRoot(2, 4)) == 2
    for i in range(1, 5):
        for j in range(1, 5):
            assert pairing(Weight.fundamental(4, i), PositiveRoot.simple(j)) == (i == j)


def test_pairing_out_of_range():
    with pytest.raises(RankMismatchError):
        pairing(Weight((1, 2)), PositiveRoot(1, 4))


def test_subtract_rootsum_examples():
    assert subtract_rootsum(Weight((4, 3)), RootSum((4, 3))) == Weight((-1, 1))
    assert subtract_rootsum(Weight((0, 0)), RootSum((1, 0))) == Weight((-2, 1))
    w = Weight((2, 5, 1))
    assert subtract_rootsum(w, RootSum.zero(3)) == w
    with pytest.raises(RankMismatchError):
        add(Weight((1,)), Weight((1, 2)))


def test_restrict_and_twist():
    assert restrict_q1(Weight((3, 3, 1, 2))) == Weight((3, 1, 2))
    assert restrict_q1(Weight((4, 3))) == Weight((3,))
    assert restrict_q1(Weight((0, 0, 0))) == Weight((0, 0))
    with pytest.raises(RankUnderflowError):
        restrict_q1(Weight((5,)))
    assert dual_twist(Weight((3, 3, 1, 2))) == Weight((2, 1, 3, 3))
    assert dual_twist(Weight((1, 2, 1))) == Weight((1, 2, 1))


def test_E_set_examples():
    assert E_set(3, 2) == {RootSum((2, 0)), RootSum((2, 1)), RootSum((2, 2))}
    assert E_set(5, 0) == {RootSum.zero(4)}
    assert E_set(4, 1) == {RootSum((1, 0, 0)), RootSum((1, 1, 0)), RootSum((1, 1, 1))}


def test_is_dominant_examples():
    assert is_dominant(Weight((3, 3, 1, 2)))
    assert is_dominant(Weight.zero(3))
    assert not is_dominant(Weight((-1, 1)))


def test_parse_round_trip():
    assert Weight.parse("3,3,1,2") == Weight((3, 3, 1, 2))
    assert str(Weight((3, 3, 1, 2))) == "3,3,1,2"
    assert RootSum.parse("r:2,1,0") == RootSum((2, 1, 0))
    assert str(RootSum((2, 1, 0))) == "r:2,1,0"
    with pytest.raises(InvalidParameterError):
        Weight.parse("3,x")


@given(st.integers(1, 5).flatmap(lambda r: st.tuples(weights(r), weights(r), st.sampled_from(positive_roots(r)))))
def test_pairing_is_linear(args):
    w1, w2, root = args
    assert pairing(w1 + w2, root) == pairing(w1, root) + pairing(w2, root)


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_subtract_rootsum_matches_cartan(rank):
    c = cartan_matrix(rank)
    w = Weight((1,) * rank)
    for s in product(range(4), repeat=rank):
        mu = subtract_rootsum(w, RootSum(s))
        for i in range(rank):
            expected = w.coords[i] - sum(c[i][j] * s[j] for j in range(rank))
            assert pairing(mu, PositiveRoot.simple(i + 1)) == expected


@given(st.integers(1, 6).flatmap(weights))
def test_dual_twist_is_involution(w):
    assert dual_twist(dual_twist(w)) == w


def _brute_E(n, k):
    # sums of positive roots each involving alpha_1, with alpha_1 coefficient k in total
    rank = n - 1
    first = [r.coeffs(rank) for r in positive_roots(rank) if r.i == 1]
    out = set()

    def rec(start, left, acc):
        if left == 0:
            out.add(RootSum(tuple(acc)))
            return
        for t in range(start, len(first)):
            rec(t, left - 1, [a + b for a, b in zip(acc, first[t])])

    rec(0, k, [0] * rank)
    return out


@pytest.mark.parametrize("n,k", [(n, k) for n in range(2, 6) for k in range(5)])
def test_E_set_matches_root_sums(n, k):
    assert E_set(n, k) == _brute_E(n, k)


@pytest.mark.parametrize("n,k", [(n, k) for n in range(3, 6) for k in range(4)])
def test_twist_maps_staircase_to_increasing(n, k):
    for s in E_set(n, k):
        t = dual_twist_rootsum(s).coeffs
        # twisted staircase: 0 <= b_1 <= ... <= b_{n-2} <= k with b_{n-1} = k
        assert t[-1] == k
        assert all(0 <= a <= b for a, b in zip(t, t[1:]))
        assert in_staircase(RootSum(s.coeffs[1:]), k)

from itertools import combinations_with_replacement, product

import pytest
from hypothesis import given, strategies as st

from weylprim.errors import InvalidParameterError, NotDominantError
from weylprim.jantzen import check_witness, is_weyl_simple, p_decompose
from weylprim.roots import Weight, pairing, positive_roots


def test_p_decompose_examples():
    d = p_decompose(8, 5)
    assert (d.s, d.a, d.b) == (0, 3, 1)
    d = p_decompose(25, 5)
    assert (d.s, d.a, d.b) == (2, 1, 0)
    d = p_decompose(10, 5)
    assert (d.s, d.a, d.b) == (1, 2, 0)
    with pytest.raises(InvalidParameterError):
        p_decompose(0, 5)


@given(st.integers(1, 10**6), st.sampled_from([2, 3, 5, 7, 11]))
def test_p_decompose_invariant(c, p):
    d = p_decompose(c, p)
    assert c == d.a * p**d.s + d.b * p ** (d.s + 1)
    assert 0 < d.a < p and d.b >= 0


def test_simplicity_examples():
    assert is_weyl_simple(Weight((3,)), 5).simple
    assert not is_weyl_simple(Weight((7,)), 5).simple
    assert is_weyl_simple(Weight((4, 1, 2)), 5).simple
    assert not is_weyl_simple(Weight((5, 1, 2)), 5).simple
    with pytest.raises(NotDominantError):
        is_weyl_simple(Weight((-1, 2)), 5)


def _brute_simple(w, p):
    # witness search over arbitrary root multisets, without the interval shortcut
    rank = w.rank
    shifted = w + Weight.rho(rank)
    roots = positive_roots(rank)
    vec = {r: r.coeffs(rank) for r in roots}
    allowed = {tuple(vec[r]) for r in roots} | {(0,) * rank}
    for alpha in roots:
        d = p_decompose(pairing(shifted, alpha), p)
        found = False
        for b0 in roots:
            rest = tuple(x - y for x, y in zip(vec[alpha], vec[b0]))
            if rest not in allowed or pairing(shifted, b0) != d.a * p**d.s:
                continue
            big = [r for r in roots if pairing(shifted, r) == p ** (d.s + 1)]
            for combo in combinations_with_replacement(big, d.b):
                total = [sum(vec[r][l] for r in combo) for l in range(rank)]
                if tuple(total) == rest:
                    found = True
                    break
            if found:
                break
        if not found:
            return False
    return True


@pytest.mark.parametrize("p", [2, 3, 5])
@pytest.mark.parametrize("rank", [1, 2, 3])
def test_matches_unrestricted_witness_search(rank, p):
    for coords in product(range(5), repeat=rank):
        w = Weight(coords)
        assert is_weyl_simple(w, p).simple == _brute_simple(w, p), coords


@given(st.integers(1, 4).flatmap(lambda r: st.lists(st.integers(0, 12), min_size=r, max_size=r)),
       st.sampled_from([2, 3, 5, 7]))
def test_witnesses_recheck(coords, p):
    w = Weight(tuple(coords))
    rep = is_weyl_simple(w, p)
    for rec in rep.records:
        if rec.witness is not None:
            assert check_witness(w, p, rec)
    assert rep.simple == (not rep.failing_roots)


@given(st.integers(1, 4).flatmap(lambda r: st.lists(st.integers(0, 6), min_size=r, max_size=r)))
def test_small_pairings_are_simple(coords):
    w = Weight(tuple(coords))
    p = 11
    if all(pairing(w + Weight.rho(w.rank), r) < p for r in positive_roots(w.rank)):
        assert is_weyl_simple(w, p).simple

from itertools import product

import pytest

from weylprim.characters import dim_weyl
from weylprim.errors import InvalidParameterError, NotDominantError
from weylprim.roots import RootSum, Weight, dual_twist, in_E_set
from weylprim.theorems import (
    only_if_weights,
    search,
    submodule_primitive_drops,
    theorem_a,
    theorem_b_condition,
    theorem_b_consistency,
    verify_embedding,
)
from weylprim.weyl import Budget, clear_cache, generated_submodule_dim

EX1 = Weight((4, 3))
EX2 = Weight((3, 3, 1, 2))


def test_theorem_a_examples():
    rep = theorem_a(EX2, 5, 4)
    assert not rep.applies and rep.failing_l == [3]
    rep = theorem_a(EX2, 5, 2)
    assert rep.applies and rep.target == Weight((5, 1, 2)) and rep.m_witness <= 2
    rep = theorem_a(EX1, 5, 4)
    assert rep.applies and rep.m_witness == 0 and rep.target == Weight((7,))


def test_theorem_a_rejects_bad_input():
    with pytest.raises(InvalidParameterError):
        theorem_a(EX1, 5, 5)
    with pytest.raises(InvalidParameterError):
        theorem_a(EX2, 5, 1, q=2)
    with pytest.raises(NotDominantError):
        theorem_a(Weight((-1, 2)), 5, 1)
    with pytest.raises(InvalidParameterError):
        theorem_a(EX1, 4, 1)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_theorem_a_twist_reduction(p):
    for coords in product(range(4), repeat=3):
        omega = Weight(coords)
        for k in range(p):
            last = theorem_a(omega, p, k, q=3)
            first = theorem_a(dual_twist(omega), p, k, q=1)
            assert last.applies == first.applies
            assert last.m_witness == first.m_witness
            assert last.target == dual_twist(first.target)


def test_condition_examples():
    rep = theorem_b_condition(EX1, 5, 4)
    assert rep.holds and rep.primitive_drops == ((0,), (3,))
    # the target (4,1,2) is Jantzen simple: only the highest weight is primitive
    rep = theorem_b_condition(EX2, 5, 1)
    assert rep.holds and rep.primitive_drops == ((0, 0, 0),)
    # target (7) with k = 2: the primitive drop 3 exceeds k
    rep = theorem_b_condition(Weight((2, 5)), 5, 2)
    assert rep.holds is False and rep.offending == ((3,),)


def test_embedding_examples():
    res = verify_embedding(EX1, 5, 4)
    assert res.is_weyl and res.dim == res.expected == 8
    res = verify_embedding(Weight((1, 2)), 5, 3)
    assert res.is_weyl is False and res.dim == 0
    res = verify_embedding(EX2, 5, 1)
    assert res.is_weyl and res.dim == dim_weyl(Weight((4, 1, 2)))


def test_generated_dims():
    assert generated_submodule_dim(EX1, 5, 4) == 8
    assert generated_submodule_dim(EX1, 5, 4, method="pbw") == 8
    assert generated_submodule_dim(EX1, 5, 0) == dim_weyl(Weight((3,)))
    assert generated_submodule_dim(dual_twist(EX1), 5, 4, q=2) == 8


def test_embedding_skips_on_budget():
    clear_cache()
    res = verify_embedding(Weight((3, 3, 2)), 5, 2, budget=Budget(3))
    assert res.skipped and res.to_dict()["status"] == "SKIPPED"


def test_consistency_examples():
    rep = theorem_b_consistency(EX1, 5, 4)
    assert rep.consistent and rep.is_weyl and rep.divisibility and rep.condition
    rep = theorem_b_consistency(Weight((2, 5)), 5, 2)
    assert rep.consistent and rep.is_weyl is False and rep.condition is False
    rep = theorem_b_consistency(Weight((1, 1, 1)), 5, 1)
    assert rep.consistent and rep.is_weyl


@pytest.mark.slow
def test_consistency_sl5_divisibility_failure():
    rep = theorem_b_consistency(EX2, 5, 4)
    assert rep.consistent and rep.is_weyl is False and rep.divisibility is False


def test_only_if_examples():
    drops = submodule_primitive_drops(EX1, 5, 4)
    assert set(drops) == {(4, 0), (4, 3)}
    assert all(in_E_set(RootSum(d), 4) for d in drops)
    assert only_if_weights(EX1, 5, 4)
    assert in_E_set(RootSum((3, 2, 2, 2)), 3)


def test_search_records():
    recs = search(3, 5, 4, 4)
    assert len(recs) == 25 * 5
    ex1 = [r for r in recs if r.omega == EX1 and r.k == 4]
    assert len(ex1) == 1
    rec = ex1[0]
    assert rec.new_primitive_weights == [Weight((-1, 1))]
    assert rec.verified_dim == 8 and rec.confirmed_in_L == [True]
    assert not any(r.new_primitive_weights for r in recs if r.k == 0)
    assert not any(r.inconsistent for r in recs)
    for r in recs:
        if r.new_primitive_weights:
            assert r.theorem_a.applies and not r.target_simple


def test_search_marks_skipped():
    clear_cache()
    recs = search(3, 5, 4, 4, verify_budget=2)
    rec = [r for r in recs if r.omega == EX1 and r.k == 4][0]
    assert rec.skipped and rec.to_dict()["verified_dim"] == "SKIPPED"

import random
from itertools import combinations_with_replacement, product
from math import comb, prod

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from weylprim import ambient
from weylprim.ambient import Layout, index_weight, inner
from weylprim.characters import dim_weyl, multiplicity, weight_multiplicities
from weylprim.errors import BudgetExceeded, InvalidParameterError
from weylprim.gfp import rank_dense
from weylprim.roots import PositiveRoot, RootSum, Weight, positive_roots, subtract_rootsum
from weylprim.tableaux import UNDEFINED, Shape, enumerate_regular_row_standard, f_monomial, rho_M
from weylprim.weyl import (
    Budget,
    Operator,
    PBWSpanner,
    WeylModule,
    act,
    get_module,
    gram,
    pbw_order,
    primitive_vectors,
    simple_weight_space,
    weyl_weight_space,
)


def highest(omega):
    return {Layout.of(omega).highest(): 1}


def sparse_sub(u, v):
    out = dict(u)
    for k, c in v.items():
        out[k] = out.get(k, 0) - c
        if not out[k]:
            del out[k]
    return out


def scale(v, c):
    return {k: c * x for k, x in v.items()} if c else {}


def random_lattice_vector(mod, drop, rng):
    vecs = mod.lattice_vectors(drop, "pbw")
    out = {}
    for v in vecs:
        c = rng.randint(-3, 3)
        for k, x in v.items():
            out[k] = out.get(k, 0) + c * x
    return {k: x for k, x in out.items() if x}


# --------------------------------------------------------------------------
# the action


def test_act_examples():
    assert act(Operator.lower(1, 2), {(0b11,): 1}, Weight((0, 1))) == {}
    assert act(Operator.lower(1, 2, 2), {(0b01, 0b01): 1}, Weight((2, 0))) == {(0b10, 0b10): 1}
    omega = Weight((3, 2, 1))
    w = highest(omega)
    for i in range(1, 4):
        for m in range(4):
            assert act(Operator.torus(i, m), w, omega) == scale(w, comb(omega.coords[i - 1], m))
    for k in range(5):
        v = act(Operator.raise_(1, 2, k), act(Operator.lower(1, 2, k), w, omega), omega)
        assert v == scale(w, comb(3, k))


def test_act_rejects_bad_operators():
    with pytest.raises(InvalidParameterError):
        act(Operator.lower(1, 4), {}, Weight((1, 1)))
    with pytest.raises(InvalidParameterError):
        Operator("H", root=PositiveRoot(1, 2))
    with pytest.raises(InvalidParameterError):
        Operator.lower(1, 2, -1)


small_weights = st.sampled_from([(1, 1), (2, 1), (0, 2), (1, 1, 1), (2, 0, 1), (1, 2, 0), (3, 1)])


@settings(max_examples=40, deadline=None)
@given(small_weights, st.integers(0, 10**6))
def test_contravariance_and_weights(coords, seed):
    rng = random.Random(seed)
    omega = Weight(coords)
    mod = get_module(omega)
    layout = mod.layout
    drops = mod.drops()
    d1 = rng.choice(drops)
    u = random_lattice_vector(mod, d1, rng)
    root = rng.choice(positive_roots(omega.rank))
    m = rng.randint(1, 3)
    d2 = tuple(a + m * c for a, c in zip(d1, root.coeffs(omega.rank)))
    v = random_lattice_vector(mod, d2, rng) if d2 in mod.multiplicities else {}
    low = ambient.lower(layout, u, root, m)
    assert inner(layout, low, v) == inner(layout, u, ambient.raise_(layout, v, root, m))
    mu2 = subtract_rootsum(omega, RootSum(d2)).coords
    assert all(index_weight(layout.n, x) == mu2 for x in low)


def test_distinct_weights_are_orthogonal():
    mod = get_module(Weight((2, 1, 1)))
    drops = mod.drops()[:12]
    for a, b in combinations_with_replacement(drops, 2):
        if a == b:
            continue
        for u in mod.lattice_vectors(a, "pbw"):
            for v in mod.lattice_vectors(b, "pbw"):
                assert inner(mod.layout, u, v) == 0


@pytest.mark.parametrize("coords", [(1, 1, 0), (1, 0, 1), (2, 1), (0, 1, 1, 1)])
def test_raising_lowering_commutator(coords):
    omega = Weight(coords)
    n = omega.rank + 1
    mod = get_module(omega)
    rng = random.Random(7)
    vectors = [random_lattice_vector(mod, d, rng) for d in mod.drops()[:10]]
    for s in range(2, n + 1):
        for m in range(s + 1, n + 1):
            for N in range(0, 4):
                for v in vectors:
                    low = Operator.lower(s, m, N)
                    up = Operator.raise_(1, m)
                    lhs = sparse_sub(act(up, act(low, v, omega), omega), act(low, act(up, v, omega), omega))
                    rhs = {}
                    if N >= 1:
                        rhs = act(Operator.lower(s, m, N - 1), act(Operator.raise_(1, s), v, omega), omega)
                    assert lhs == rhs


def _apply_f(layout, t, v):
    for root, N in reversed(f_monomial(t).factors):
        v = ambient.lower(layout, v, root, N)
    return v


def test_top_row_removal_identity_sl4():
    branches = {"defined": 0, "undefined": 0}
    for coords in product(range(3), repeat=3):
        omega = Weight(coords)
        layout = Layout.of(omega)
        w = highest(omega)
        a1 = coords[0]
        for k in range(1, 4):
            start = ambient.lower(layout, w, PositiveRoot(1, 2), k)
            for lam in [(1, 0, 0), (2, 0, 0), (2, 1, 0), (3, 1, 0), (2, 1, 1), (3, 0, 0)]:
                shape = Shape(4, lam)
                d2 = lam[0] - lam[1]
                for t in enumerate_regular_row_standard(shape):
                    ft = _apply_f(layout, t, start)
                    for l in range(1, min(k, d2) + 1):
                        for M in combinations_with_replacement((3, 4), l):
                            lhs = ft
                            for mi in M:
                                lhs = ambient.raise_(layout, lhs, PositiveRoot(1, mi), 1)
                            image = rho_M(t, M)
                            if image is UNDEFINED:
                                branches["undefined"] += 1
                                assert lhs == {}
                            else:
                                branches["defined"] += 1
                                c = prod(a1 + i - k for i in range(1, l + 1))
                                base = ambient.lower(layout, w, PositiveRoot(1, 2), k - l)
                                assert lhs == scale(_apply_f(layout, image, base), c)
    assert branches["defined"] and branches["undefined"]


@pytest.mark.parametrize("coords", [(0, 2), (3, 1), (2, 0, 1), (1, 1, 1, 1), (4, 0, 0)])
def test_first_root_string_dimension(coords):
    omega = Weight(coords)
    rest = (0,) * (omega.rank - 1)
    for k in range(7):
        expected = 1 if k <= coords[0] else 0
        assert multiplicity(omega, (k,) + rest) == expected
        assert weyl_weight_space(omega, (k,) + rest, 5).dim == expected
        v = ambient.lower(Layout.of(omega), highest(omega), PositiveRoot(1, 2), k)
        assert bool(v) == bool(expected)


# --------------------------------------------------------------------------
# weight spaces and the form


def test_weight_space_examples():
    omega = Weight((1, 1))
    assert weyl_weight_space(omega, omega, 3).dim == 1
    assert weyl_weight_space(omega, (1, 1), 7).dim == 2
    top = weyl_weight_space(Weight((2, 1)), (0, 0), 5)
    assert top.basis == [highest(Weight((2, 1)))]
    assert gram(top).tolist() == [[1]]
    assert gram(weyl_weight_space(Weight((1,)), (1,), 5)).tolist() == [[1]]
    for p in (2, 3, 5):
        model = weyl_weight_space(Weight((p,)), (1,), p)
        assert gram(model).tolist() == [[0]]
        assert model.simple_dim == 0
    assert simple_weight_space(Weight((4, 3)), (0, 0), 5).simple_dim == 1
    assert simple_weight_space(Weight((4, 3)), (4, 0), 5).simple_dim >= 1


@pytest.mark.parametrize("coords,p", [((1, 1), 3), ((2, 1), 2), ((1, 1, 1), 2), ((2, 0, 1), 3), ((3, 1), 5)])
def test_weight_space_ranks(coords, p):
    omega = Weight(coords)
    mod = WeylModule(omega)
    total = 0
    for drop, mult in weight_multiplicities(omega).items():
        for method in ("pbw", "tableau"):
            model = mod.weight_space(drop, p, method)
            assert model.dim == mult
            assert model.simple_dim <= model.dim
            assert (model.gram == model.gram.T).all()
        total += mult
    assert total == dim_weyl(omega)


@pytest.mark.parametrize("coords,p", [((2, 1), 3), ((1, 1, 1), 2), ((1, 2, 1), 3)])
def test_spans_agree_across_orders_and_methods(coords, p):
    omega = Weight(coords)
    mod = WeylModule(omega)
    rev = PBWSpanner(mod.layout, mod.highest, pbw_order(omega.rank)[::-1], omega.rank)
    for drop in mod.drops():
        model = mod.weight_space(drop, p, "pbw")
        for other in (rev.vectors(drop), mod.lattice_vectors(drop, "tableau")):
            dense = model.dense(other)
            both = np.vstack([model.matrix, dense])
            assert rank_dense(dense, p) == model.dim == rank_dense(both, p)


def test_primitive_examples():
    omega = Weight((4, 3))
    top = primitive_vectors(omega, 5, (0, 0), {1})
    assert len(top) == 1
    assert primitive_vectors(omega, 5, (4, 3), {1})
    assert primitive_vectors(Weight((3, 3, 1, 2)), 5, (2, 1, 0, 0), {1})


def test_budget_is_enforced():
    mod = WeylModule(Weight((2, 2, 1)), Budget(5))
    with pytest.raises(BudgetExceeded):
        for drop in mod.drops():
            mod.lattice_vectors(drop, "pbw")

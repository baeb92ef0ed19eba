"""Brute-force realization of Weyl and simple SL_n-modules over GF(p).

``Delta(omega)`` over GF(p) is the reduction of the lattice ``U_Z^- w+``
inside the ambient tensor space of :mod:`weylprim.ambient`.  Its image in
``W (x) GF(p)`` is the Weyl module because ``W`` is a tilting module whose
highest weight is ``omega`` with multiplicity one.  ``L(omega)`` is the
quotient by the radical of the restricted standard form, which is
contravariant with ``<w+, w+> = 1``.

Everything is computed one weight space at a time.  Weight spaces are
addressed by their *drop*: the simple-root coordinates of ``omega - mu``.

Two spanning sets are available for a weight space of ``Delta(omega)``:

``"pbw"``
    every lowering PBW monomial of the right weight applied to ``w+``;
    monomials use the fixed root order (height, then ``(i, j)``).
``"tableau"``
    ``F_t w+`` for the standard tableaux ``t`` of the coherent shape; exactly
    ``dim`` vectors.  Much cheaper on large modules.  The rank over GF(p) is
    checked against the characteristic-zero multiplicity on every use and the
    code falls back to ``"pbw"`` if it ever comes up short.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import ambient
from .ambient import Layout
from .characters import weight_multiplicities
from .errors import BudgetExceeded, InvalidParameterError, NotDominantError
from .gfp import (
    GFpVector,
    check_prime,
    independent_rows,
    left_nullspace_dense,
    rank_dense,
)
from .roots import PositiveRoot, RootSum, Weight, dual_twist, is_dominant, positive_roots
from .tableaux import coherent_shape, content_for_drop, enumerate_standard, f_monomial

DEFAULT_BUDGET = 10**6


class Budget:
    """Cap on the number of lattice vectors the oracle may construct."""

    def __init__(self, limit: int | None = None):
        if limit is None:
            limit = int(os.environ.get("WEYLPRIM_BUDGET", DEFAULT_BUDGET))
        self.limit = limit
        self.used = 0
        self._lock = threading.Lock()

    def spend(self, count: int) -> None:
        with self._lock:
            self.used += count
            if self.used > self.limit:
                raise BudgetExceeded(f"vector budget {self.limit} exhausted")


# --------------------------------------------------------------------------
# operators


@dataclass(frozen=True)
class Operator:
    """``X_minus``/``X_plus`` with a positive root, or ``H`` with a simple index; divided power ``m``."""

    kind: str
    root: PositiveRoot | None = None
    index: int | None = None
    m: int = 1

    def __post_init__(self):
        if self.m < 0:
            raise InvalidParameterError("divided power must be >= 0")
        if self.kind in ("X_minus", "X_plus"):
            if self.root is None:
                raise InvalidParameterError(f"{self.kind} needs a root")
        elif self.kind == "H":
            if self.index is None:
                raise InvalidParameterError("H needs a simple index")
        else:
            raise InvalidParameterError(f"unknown operator kind {self.kind!r}")

    @classmethod
    def lower(cls, i: int, j: int, m: int = 1) -> "Operator":
        return cls("X_minus", PositiveRoot(i, j), m=m)

    @classmethod
    def raise_(cls, i: int, j: int, m: int = 1) -> "Operator":
        return cls("X_plus", PositiveRoot(i, j), m=m)

    @classmethod
    def torus(cls, i: int, m: int = 1) -> "Operator":
        return cls("H", index=i, m=m)


def act(op: Operator, v: dict, omega: Weight) -> dict:
    """Apply ``op`` to an integer vector of the ambient space of ``omega``."""
    layout = Layout.of(omega)
    if op.root is not None and op.root.j > layout.n:
        raise InvalidParameterError(f"root {op.root} outside SL_{layout.n}")
    if op.index is not None and not 1 <= op.index < layout.n:
        raise InvalidParameterError(f"no simple root {op.index} in SL_{layout.n}")
    if op.kind == "X_minus":
        return ambient.lower(layout, v, op.root, op.m)
    if op.kind == "X_plus":
        return ambient.raise_(layout, v, op.root, op.m)
    return ambient.torus(layout, v, op.index, op.m)


def pbw_order(rank: int, roots: Iterable[PositiveRoot] | None = None) -> list[PositiveRoot]:
    """Global PBW root order: by height, then lexicographic in ``(i, j)``."""
    roots = positive_roots(rank) if roots is None else list(roots)
    return sorted(roots, key=lambda r: (r.height, r.i, r.j))


class PBWSpanner:
    """Images of lowering PBW monomials on a fixed start vector, by weight.

    ``order`` lists the roots left to right; the rightmost factor acts first.
    """

    def __init__(self, layout: Layout, start: dict, order: Sequence[PositiveRoot], rank: int,
                 budget: Budget | None = None):
        self.layout = layout
        self.start = start
        self.order = list(order)
        self.rank = rank
        self.budget = budget
        self._memo: dict = {}
        self._vec = [r.coeffs(rank) for r in self.order]

    def vectors(self, drop: Sequence[int]) -> list[dict]:
        return self._rec(0, tuple(drop))

    def _rec(self, t: int, drop: tuple[int, ...]) -> list[dict]:
        if t == len(self.order):
            return [self.start] if not any(drop) and self.start else []
        key = (t, drop)
        hit = self._memo.get(key)
        if hit is not None:
            return hit
        root, vec = self.order[t], self._vec[t]
        out = []
        m = 0
        rest = drop
        while all(c >= 0 for c in rest):
            for v in self._rec(t + 1, rest):
                w = ambient.lower(self.layout, v, root, m) if m else v
                if w:
                    out.append(w)
            m += 1
            rest = tuple(c - m * e for c, e in zip(drop, vec))
        if self.budget is not None:
            self.budget.spend(len(out))
        self._memo[key] = out
        return out


class FSpanner:
    """``F_t`` applied to a start vector, memoized on monomial suffixes."""

    def __init__(self, layout: Layout, start: dict, budget: Budget | None = None):
        self.layout = layout
        self.start = start
        self.budget = budget
        self._memo: dict = {(): start}

    def apply(self, factors: tuple) -> dict:
        hit = self._memo.get(factors)
        if hit is not None:
            return hit
        (root, N), rest = factors[0], factors[1:]
        out = ambient.lower(self.layout, self.apply(rest), root, N)
        if self.budget is not None:
            self.budget.spend(1)
        self._memo[factors] = out
        return out


# --------------------------------------------------------------------------
# weight spaces


@dataclass
class WeightSpaceModel:
    """One weight space of ``Delta(omega)`` over GF(p)."""

    omega: Weight
    drop: tuple[int, ...]
    p: int
    layout: Layout
    spanning: list[dict]
    basis: list[dict]  # integer lattice vectors, independent mod p
    columns: list
    col_index: dict
    orbit_weights: np.ndarray  # orbit sizes mod p per column
    matrix: np.ndarray  # basis rows, dense mod p
    gram: np.ndarray
    method: str = "tableau"
    _simple_rows: list[int] | None = field(default=None, repr=False)

    @property
    def mu(self) -> Weight:
        from .roots import subtract_rootsum

        return subtract_rootsum(self.omega, RootSum(self.drop))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def simple_dim(self) -> int:
        return len(self.simple_rows)

    @property
    def simple_rows(self) -> list[int]:
        """Basis indices whose images form a basis of ``L(omega)^mu``."""
        if self._simple_rows is None:
            self._simple_rows = independent_rows(self.gram, self.p) if self.dim else []
        return self._simple_rows

    def dense(self, vectors: Sequence[dict]) -> np.ndarray:
        """Vectors restricted to this space's columns, mod p (other coordinates pair to zero)."""
        p = self.p
        out = np.zeros((len(vectors), len(self.columns)), dtype=np.int64)
        idx = self.col_index
        for r, v in enumerate(vectors):
            for key, val in v.items():
                c = idx.get(key)
                if c is not None:
                    out[r, c] = val % p
        return out

    def pair(self, vectors: Sequence[dict]) -> np.ndarray:
        """``<basis_r, v_s>`` mod p, shape ``(dim, len(vectors))``."""
        if not vectors or not self.dim:
            return np.zeros((self.dim, len(vectors)), dtype=np.int64)
        other = self.dense(vectors)
        return ((self.matrix * self.orbit_weights) % self.p) @ other.T % self.p

    def combine(self, coeffs: np.ndarray) -> GFpVector:
        """``sum_r c_r basis_r`` as a sparse GF(p) vector."""
        row = (np.asarray(coeffs, dtype=np.int64) @ self.matrix) % self.p
        nz = np.nonzero(row)[0]
        return GFpVector(self.p, {self.columns[i]: int(row[i]) for i in nz})


class WeylModule:
    """Lattice model of ``Delta(omega)`` with per-weight caches (safe for concurrent reads)."""

    def __init__(self, omega: Weight, budget: Budget | None = None):
        if not is_dominant(omega):
            raise NotDominantError(f"weight {omega} is not dominant")
        self.omega = omega
        self.rank = omega.rank
        self.n = omega.rank + 1
        self.layout = Layout.of(omega)
        self.highest = {self.layout.highest(): 1}
        self.budget = budget if budget is not None else Budget()
        self.multiplicities = weight_multiplicities(omega)
        self._pbw = PBWSpanner(self.layout, self.highest, pbw_order(self.rank), self.rank, self.budget)
        self._fspan = FSpanner(self.layout, self.highest, self.budget)
        self._shape = coherent_shape(omega, first=1)
        self._lattice: dict = {}
        self._models: dict = {}
        self._lock = threading.Lock()

    def use_budget(self, budget: Budget) -> None:
        self.budget = budget
        self._pbw.budget = budget
        self._fspan.budget = budget

    def multiplicity(self, drop: Sequence[int]) -> int:
        return self.multiplicities.get(tuple(drop), 0)

    def drops(self) -> list[tuple[int, ...]]:
        return sorted(self.multiplicities, key=lambda d: (sum(d), d))

    # lattice vectors over Z -------------------------------------------------

    def lattice_vectors(self, drop: Sequence[int], method: str = "tableau") -> list[dict]:
        drop = tuple(drop)
        key = (drop, method)
        hit = self._lattice.get(key)
        if hit is not None:
            return hit
        if any(c < 0 for c in drop) or len(drop) != self.rank:
            vecs = []
        elif method == "pbw":
            vecs = self._pbw.vectors(drop)
        elif method == "tableau":
            vecs = self._tableau_vectors(drop)
        else:
            raise InvalidParameterError(f"unknown spanning method {method!r}")
        with self._lock:
            self._lattice.setdefault(key, vecs)
        return vecs

    def _tableau_vectors(self, drop) -> list[dict]:
        content = content_for_drop(self._shape, drop)
        if content is None:
            return []
        out = []
        for t in enumerate_standard(self._shape, content):
            v = self._fspan.apply(f_monomial(t).factors)
            if v:
                out.append(v)
        return out

    # GF(p) models -----------------------------------------------------------

    def weight_space(self, drop: Sequence[int], p: int, method: str = "tableau") -> WeightSpaceModel:
        drop = tuple(drop)
        key = (drop, p, method)
        hit = self._models.get(key)
        if hit is not None:
            return hit
        check_prime(p)
        spanning = self.lattice_vectors(drop, method)
        expected = self.multiplicity(drop)
        model = self._build_model(drop, p, spanning, method)
        if model.dim < expected and method == "tableau":
            model = self.weight_space(drop, p, "pbw")
        with self._lock:
            self._models.setdefault(key, model)
        return model

    def _build_model(self, drop, p, spanning, method) -> WeightSpaceModel:
        cols: dict = {}
        for v in spanning:
            for key in v:
                if key not in cols:
                    cols[key] = len(cols)
        columns = list(cols)
        full = np.zeros((len(spanning), len(columns)), dtype=np.int64)
        for r, v in enumerate(spanning):
            for key, val in v.items():
                full[r, cols[key]] = val % p
        rows = independent_rows(full, p) if spanning else []
        basis = [spanning[r] for r in rows]
        matrix = full[rows] if rows else np.zeros((0, len(columns)), dtype=np.int64)
        segs = self.layout.segments
        weights = np.array([ambient._orbit_size(segs, x) % p for x in columns], dtype=np.int64)
        gram = ((matrix * weights) % p) @ matrix.T % p if rows else np.zeros((0, 0), dtype=np.int64)
        return WeightSpaceModel(
            omega=self.omega, drop=drop, p=p, layout=self.layout, spanning=spanning,
            basis=basis, columns=columns, col_index=cols, orbit_weights=weights,
            matrix=matrix, gram=gram, method=method,
        )

    # derived quantities -------------------------------------------------------

    def simple_dim(self, drop, p: int, method: str = "tableau") -> int:
        return self.weight_space(drop, p, method).simple_dim

    def simple_total_dim(self, p: int, method: str = "tableau") -> int:
        return sum(self.simple_dim(d, p, method) for d in self.drops())

    def primitive_vectors(self, drop, p: int, omitted: Iterable[int] = (), method: str = "tableau"):
        """Basis (modulo the radical) of vectors of ``L(omega)^mu`` killed by ``X_{alpha_i,m}``.

        ``i`` ranges over simple indices not in ``omitted``, ``m >= 1``.  A vector
        ``v`` satisfies ``X_{alpha_i,m} v in rad`` iff it is orthogonal to
        ``X_{-alpha_i,m} Delta^{mu + m alpha_i}`` by contravariance.
        """
        model = self.weight_space(drop, p, method)
        if not model.dim:
            return []
        blocks = [np.zeros((model.dim, 0), dtype=np.int64)]
        for i, m, images in self._raising_partners(drop, p, omitted, method):
            blocks.append(model.pair(images))
        return _quotient_solutions(model, np.hstack(blocks), model.gram)

    def _raising_partners(self, drop, p, omitted, method):
        omitted = set(omitted)
        for i in range(1, self.rank + 1):
            if i in omitted:
                continue
            root = PositiveRoot.simple(i)
            for m in range(1, drop[i - 1] + 1):
                up = list(drop)
                up[i - 1] -= m
                if not self.multiplicity(up):
                    continue
                above = self.weight_space(up, p, method)
                images = [ambient.lower(self.layout, y, root, m) for y in above.basis]
                yield i, m, images

    def weyl_primitive_vectors(self, drop, p: int, omitted: Iterable[int] = (), method: str = "tableau"):
        """Basis of vectors of ``Delta(omega)^mu`` itself killed by every ``X_{alpha_i,m}``."""
        model = self.weight_space(drop, p, method)
        if not model.dim:
            return []
        omitted = set(omitted)
        images_all: list[list[dict]] = [[] for _ in range(model.dim)]
        for i in range(1, self.rank + 1):
            if i in omitted:
                continue
            root = PositiveRoot.simple(i)
            for m in range(1, drop[i - 1] + 1):
                up = list(drop)
                up[i - 1] -= m
                if not self.multiplicity(up):
                    continue
                for r, b in enumerate(model.basis):
                    img = ambient.raise_(self.layout, b, root, m)
                    images_all[r].append({(i, m, key): val for key, val in img.items()})
        rows = []
        for imgs in images_all:
            merged: dict = {}
            for d in imgs:
                merged.update(d)
            rows.append(merged)
        cols: dict = {}
        for d in rows:
            for key in d:
                cols.setdefault(key, len(cols))
        mat = np.zeros((model.dim, len(cols)), dtype=np.int64)
        for r, d in enumerate(rows):
            for key, val in d.items():
                mat[r, cols[key]] = val % p
        kernel = left_nullspace_dense(mat, p) if cols else np.eye(model.dim, dtype=np.int64)
        return [model.combine(c) for c in kernel]


def _quotient_solutions(model: WeightSpaceModel, constraints: np.ndarray, gram: np.ndarray):
    """Solutions of ``c @ constraints = 0`` that are nonzero modulo the radical, as vectors."""
    p = model.p
    sols = left_nullspace_dense(constraints, p)
    rad = left_nullspace_dense(gram, p)
    if not sols.shape[0]:
        return []
    stacked = np.vstack([rad, sols]) if rad.shape[0] else sols
    picked = [r - rad.shape[0] for r in independent_rows(stacked, p) if r >= rad.shape[0]]
    return [model.combine(sols[r]) for r in picked]


_registry: dict = {}
_registry_lock = threading.Lock()


def get_module(omega: Weight, budget: Budget | None = None) -> WeylModule:
    """Shared :class:`WeylModule` per weight (a small LRU).

    Passing ``budget`` makes further vector construction on the shared module
    draw from it; vectors already cached are not charged again.
    """
    key = omega.coords
    with _registry_lock:
        mod = _registry.pop(key, None)
        if mod is None:
            mod = WeylModule(omega, Budget(10**12))
        _registry[key] = mod
        while len(_registry) > 8:
            _registry.pop(next(iter(_registry)))
    if budget is not None:
        mod.use_budget(budget)
    return mod


def clear_cache() -> None:
    with _registry_lock:
        _registry.clear()


# --------------------------------------------------------------------------
# functional front end


def _drop_of(omega: Weight, mu) -> tuple[int, ...]:
    if isinstance(mu, RootSum):
        return mu.coeffs
    if isinstance(mu, Weight):
        from .roots import rootsum_to_weight, weight_to_rootsum

        diff = weight_to_rootsum(omega - mu)
        if any(c.denominator != 1 for c in diff):
            raise InvalidParameterError(f"{mu} is not in the root lattice coset of {omega}")
        return tuple(int(c) for c in diff)
    return tuple(mu)


def weyl_weight_space(omega: Weight, mu, p: int, method: str = "tableau") -> WeightSpaceModel:
    """``mu`` may be a Weight, a RootSum drop, or a plain drop tuple."""
    return get_module(omega).weight_space(_drop_of(omega, mu), p, method)


def gram(model: WeightSpaceModel) -> np.ndarray:
    return model.gram


def simple_weight_space(omega: Weight, mu, p: int, method: str = "tableau") -> WeightSpaceModel:
    """The weight space model; ``simple_dim`` / ``simple_rows`` describe ``L(omega)^mu``."""
    return weyl_weight_space(omega, mu, p, method)


def primitive_vectors(omega: Weight, p: int, mu, omitted: Iterable[int] = (), method: str = "tableau"):
    return get_module(omega).primitive_vectors(_drop_of(omega, mu), p, omitted, method)


def weyl_primitive_vectors(omega: Weight, p: int, mu, omitted: Iterable[int] = (), method: str = "tableau"):
    return get_module(omega).weyl_primitive_vectors(_drop_of(omega, mu), p, omitted, method)


def primitive_drops(omega: Weight, p: int, method: str = "tableau", budget: Budget | None = None):
    """Drops carrying a nonzero primitive vector of ``Delta(omega)`` over GF(p), with dimensions."""
    mod = get_module(omega, budget)
    out = {}
    for d in mod.drops():
        vecs = mod.weyl_primitive_vectors(d, p, (), method)
        if vecs:
            out[d] = len(vecs)
    return out


# --------------------------------------------------------------------------
# G^(1)-submodule of L(omega) generated by X_{-alpha_1,k} v+


@dataclass
class SubmoduleLayer:
    drop: tuple[int, ...]  # full drop (k, b_2, ..., b_{n-1}) in Delta(omega)
    spanning: list[dict]
    pairing: np.ndarray  # <s_a, basis_r>, shape (len(spanning), dim Delta^mu)
    dim: int


class GeneratedSubmodule:
    """``K G^(1) X_{-alpha_1,k} v+`` inside ``L(omega)``, one weight at a time.

    ``X_{-alpha_1,k} v+`` is G^(1)-primitive, so the submodule is spanned by
    lowering monomials of G^(1) applied to it.  With ``method="pbw"`` these are
    all PBW monomials in the roots ``alpha_i + ... + alpha_{j-1}``, ``i >= 2``;
    with ``method="tableau"`` they are the images ``F_s X_{-alpha_1,k} v+`` of
    a standard basis of ``Delta(bar omega + k bar omega_2)``, which span because
    the submodule is a quotient of that Weyl module.  The dimension of the
    image in ``L(omega)^mu`` is the rank of the pairing against all of
    ``Delta(omega)^mu``.
    """

    def __init__(self, omega: Weight, p: int, k: int, method: str = "tableau",
                 budget: Budget | None = None):
        if omega.rank < 2:
            raise InvalidParameterError("G^(1) submodules need n >= 3")
        check_prime(p)
        self.omega = omega
        self.p = p
        self.k = k
        self.method = method
        self.module = get_module(omega, budget)
        self.target = Weight((omega.coords[1] + k,) + omega.coords[2:])
        layout = self.module.layout
        self.start = ambient.lower(layout, self.module.highest, PositiveRoot(1, 2), k)
        self.target_multiplicities = weight_multiplicities(self.target)
        rank = omega.rank
        if method == "pbw":
            order = pbw_order(rank, [r for r in positive_roots(rank) if r.i >= 2])
            self._pbw = PBWSpanner(layout, self.start, order, rank, self.module.budget)
        elif method == "tableau":
            self._fspan = FSpanner(layout, self.start, self.module.budget)
            self._shape = coherent_shape(self.target, first=2)
        else:
            raise InvalidParameterError(f"unknown spanning method {method!r}")
        self._layers: dict = {}

    def drops(self) -> list[tuple[int, ...]]:
        """Restricted drops ``(b_2, ..., b_{n-1})`` of the target Weyl module."""
        return sorted(self.target_multiplicities, key=lambda d: (sum(d), d))

    def spanning(self, rdrop) -> list[dict]:
        if not self.start:
            return []
        if self.method == "pbw":
            return self._pbw.vectors((0,) + tuple(rdrop))
        content = content_for_drop(self._shape, rdrop)
        if content is None:
            return []
        out = []
        for t in enumerate_standard(self._shape, content):
            v = self._fspan.apply(f_monomial(t).factors)
            if v:
                out.append(v)
        return out

    def layer(self, rdrop) -> SubmoduleLayer:
        rdrop = tuple(rdrop)
        hit = self._layers.get(rdrop)
        if hit is not None:
            return hit
        full = (self.k,) + rdrop
        span = self.spanning(rdrop)
        model = self.module.weight_space(full, self.p)
        pair = model.pair(span).T if span else np.zeros((0, model.dim), dtype=np.int64)
        layer = SubmoduleLayer(full, span, pair, rank_dense(pair, self.p))
        self._layers[rdrop] = layer
        return layer

    def dim(self) -> int:
        return sum(self.layer(d).dim for d in self.drops())

    def weight_dims(self) -> dict[tuple[int, ...], int]:
        return {d: self.layer(d).dim for d in self.drops()}

    def primitive_dim(self, rdrop) -> int:
        """Dimension of G^(1)-primitive vectors of the submodule at this weight (as a subspace of L)."""
        layer = self.layer(rdrop)
        if not layer.dim:
            return 0
        p = self.p
        model = self.module.weight_space(layer.drop, p)
        blocks = [np.zeros((len(layer.spanning), 0), dtype=np.int64)]
        for _, _, images in self.module._raising_partners(layer.drop, p, {1}, "tableau"):
            blocks.append(_pair_sets(model, layer.spanning, images))
        cons = np.hstack(blocks)
        sols = left_nullspace_dense(cons, p).shape[0]
        trivial = left_nullspace_dense(np.hstack([cons, layer.pairing]), p).shape[0]
        return sols - trivial

    def primitive_drops(self) -> dict[tuple[int, ...], int]:
        """Full drops ``(k, b_2, ...)`` carrying nonzero primitive vectors of the submodule."""
        out = {}
        for d in self.drops():
            c = self.primitive_dim(d)
            if c:
                out[(self.k,) + d] = c
        return out


def _pair_sets(model: WeightSpaceModel, u: Sequence[dict], v: Sequence[dict]) -> np.ndarray:
    if not u or not v:
        return np.zeros((len(u), len(v)), dtype=np.int64)
    a = model.dense(u)
    b = model.dense(v)
    return ((a * model.orbit_weights) % model.p) @ b.T % model.p


def generated_submodule_dim(omega: Weight, p: int, k: int, q: int = 1, method: str = "tableau",
                            budget: Budget | None = None) -> int:
    """Dimension of the G^(q)-submodule of ``L(omega)`` generated by ``X_{-alpha_q,k} v+``."""
    n = omega.rank + 1
    if q not in (1, n - 1):
        raise InvalidParameterError("q must be 1 or n-1")
    if q == n - 1 and q != 1:
        omega = dual_twist(omega)
    return GeneratedSubmodule(omega, p, k, method, budget).dim()

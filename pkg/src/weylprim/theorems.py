"""Decision procedures for embedding Weyl modules into restrictions of simple modules.

The combinatorial layer (:func:`theorem_a`) only needs pairings and the
Jantzen criterion.  Everything else calls the brute-force oracle in
:mod:`weylprim.weyl` and can run out of budget, in which case the result is
marked skipped instead of silently passing.

For ``q = n - 1`` every question is transported to ``q = 1`` by
:func:`weylprim.roots.dual_twist`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .characters import dim_weyl
from .errors import BudgetExceeded, InvalidParameterError, NotDominantError
from .gfp import check_prime
from .jantzen import is_weyl_simple
from .roots import (
    E_set,
    RootSum,
    Weight,
    dual_twist,
    in_E_set,
    in_staircase,
    is_dominant,
    restrict_q1,
    subtract_rootsum,
)
from .weyl import Budget, GeneratedSubmodule, get_module, primitive_drops


def _check(omega: Weight, p: int, k: int, q: int) -> int:
    check_prime(p)
    if not is_dominant(omega):
        raise NotDominantError(f"weight {omega} is not dominant")
    n = omega.rank + 1
    if n < 3:
        raise InvalidParameterError("theorems need n >= 3")
    if q not in (1, n - 1):
        raise InvalidParameterError(f"q must be 1 or {n - 1}")
    if not 0 <= k <= p - 1:
        raise InvalidParameterError(f"k must satisfy 0 <= k <= p-1, got k={k}, p={p}")
    return n


def _to_q1(omega: Weight, q: int) -> Weight:
    return omega if q == 1 else dual_twist(omega)


def _target_q1(omega1: Weight, k: int) -> Weight:
    bar = restrict_q1(omega1)
    return Weight((bar.coords[0] + k,) + bar.coords[1:])


@dataclass(frozen=True)
class TheoremAReport:
    omega: Weight
    p: int
    k: int
    q: int
    divisibility: tuple[tuple[int, int, bool], ...]  # (l, <omega,alpha_q> - l mod p, ok)
    m_witness: int | None
    target: Weight
    k_in_range: bool = True

    @property
    def applies(self) -> bool:
        return self.k_in_range and all(ok for _, _, ok in self.divisibility) and self.m_witness is not None

    @property
    def failing_l(self) -> list[int]:
        return [l for l, _, ok in self.divisibility if not ok]

    def to_dict(self) -> dict:
        return {
            "omega": list(self.omega.coords),
            "p": self.p,
            "k": self.k,
            "q": self.q,
            "applies": self.applies,
            "divisibility": [
                {"l": l, "residue": r, "ok": ok} for l, r, ok in self.divisibility
            ],
            "failing_l": self.failing_l,
            "m_witness": self.m_witness,
            "target": list(self.target.coords),
        }


def theorem_a(omega: Weight, p: int, k: int, q: int = 1) -> TheoremAReport:
    """Check the hypotheses of Theorem A for ``X_{-alpha_q,k} v+``.

    ``target`` is written in the fundamental weights of G^(q) in their natural
    order, so for ``q = n-1`` it is ``(a_1, ..., a_{n-2} + k)``.
    """
    n = _check(omega, p, k, q)
    a_q = omega.coords[q - 1]
    div = tuple((l, (a_q - l) % p, (a_q - l) % p != 0) for l in range(k))
    omega1 = _to_q1(omega, q)
    m_witness = None
    for m in range(k + 1):
        if is_weyl_simple(_target_q1(omega1, m), p).simple:
            m_witness = m
            break
    target = _target_q1(omega1, k)
    if q != 1:
        target = dual_twist(target)
    return TheoremAReport(omega, p, k, q, div, m_witness, target)


@dataclass(frozen=True)
class ConditionReport:
    holds: bool | None  # None = skipped
    primitive_drops: tuple[tuple[int, ...], ...] = ()
    offending: tuple[tuple[int, ...], ...] = ()
    skipped: bool = False

    def to_dict(self) -> dict:
        return {
            "holds": self.holds,
            "skipped": self.skipped,
            "primitive_drops": [list(d) for d in self.primitive_drops],
            "offending": [list(d) for d in self.offending],
        }


def theorem_b_condition(omega: Weight, p: int, k: int, q: int = 1,
                        budget: Budget | None = None) -> ConditionReport:
    """Brute-force Theorem B condition: every primitive weight of the target Weyl module is a staircase.

    Drops are reported in the q=1 orientation ``(b_2, ..., b_{n-1})``.
    """
    _check(omega, p, k, q)
    target = _target_q1(_to_q1(omega, q), k)
    try:
        drops = primitive_drops(target, p, budget=budget)
    except BudgetExceeded:
        return ConditionReport(None, skipped=True)
    found = tuple(sorted(drops))
    bad = tuple(d for d in found if not in_staircase(RootSum(d), k))
    return ConditionReport(not bad, found, bad)


@dataclass(frozen=True)
class EmbeddingResult:
    is_weyl: bool | None
    dim: int | None
    expected: int
    skipped: bool = False

    def to_dict(self) -> dict:
        if self.skipped:
            return {"status": "SKIPPED", "expected": self.expected}
        return {"is_weyl": self.is_weyl, "dim": self.dim, "expected": self.expected}


def verify_embedding(omega: Weight, p: int, k: int, q: int = 1, budget: Budget | None = None,
                     method: str = "tableau") -> EmbeddingResult:
    """Is the submodule generated by ``X_{-alpha_q,k} v+`` the full target Weyl module?"""
    _check(omega, p, k, q)
    omega1 = _to_q1(omega, q)
    expected = dim_weyl(_target_q1(omega1, k))
    try:
        dim = GeneratedSubmodule(omega1, p, k, method, budget).dim()
    except BudgetExceeded:
        return EmbeddingResult(None, None, expected, skipped=True)
    return EmbeddingResult(dim == expected, dim, expected)


def divisibility_holds(omega: Weight, p: int, k: int, q: int = 1) -> bool:
    a_q = omega.coords[q - 1]
    return all((a_q - l) % p for l in range(k))


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool | None
    is_weyl: bool | None
    divisibility: bool
    condition: bool | None
    skipped: bool = False

    def to_dict(self) -> dict:
        return {
            "consistent": self.consistent,
            "is_weyl": self.is_weyl,
            "divisibility": self.divisibility,
            "condition": self.condition,
            "skipped": self.skipped,
        }


def theorem_b_consistency(omega: Weight, p: int, k: int, q: int = 1,
                          budget: Budget | None = None) -> ConsistencyReport:
    """Both sides of Theorem B's biconditional, computed independently."""
    emb = verify_embedding(omega, p, k, q, budget)
    div = divisibility_holds(omega, p, k, q)
    cond = theorem_b_condition(omega, p, k, q, budget)
    if emb.skipped or cond.skipped:
        return ConsistencyReport(None, emb.is_weyl, div, cond.holds, skipped=True)
    rhs = div and cond.holds
    return ConsistencyReport(emb.is_weyl == rhs, emb.is_weyl, div, cond.holds)


def submodule_primitive_drops(omega: Weight, p: int, k: int, q: int = 1,
                              budget: Budget | None = None) -> dict[tuple[int, ...], int]:
    """Full drops (q=1 orientation) of primitive vectors in the generated submodule of ``L(omega)``."""
    _check(omega, p, k, q)
    return GeneratedSubmodule(_to_q1(omega, q), p, k, budget=budget).primitive_drops()


def only_if_weights(omega: Weight, p: int, k: int, q: int = 1, budget: Budget | None = None) -> bool:
    """Every primitive weight of the generated submodule lies in ``omega - E(1,k)``."""
    drops = submodule_primitive_drops(omega, p, k, q, budget)
    return all(in_E_set(RootSum(d), k) for d in drops)


# --------------------------------------------------------------------------
# search harness


@dataclass
class SearchRecord:
    n: int
    p: int
    omega: Weight
    k: int
    q: int
    theorem_a: TheoremAReport
    target_simple: bool
    verified_dim: int | None = None  # None together with skipped=True means SKIPPED
    new_primitive_weights: list[Weight] = field(default_factory=list)
    new_primitive_drops: list[tuple[int, ...]] = field(default_factory=list)
    confirmed_in_L: list[bool] = field(default_factory=list)
    skipped: bool = False
    inconsistent: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.p,
            "omega": list(self.omega.coords),
            "k": self.k,
            "q": self.q,
            "theorem_a": self.theorem_a.to_dict(),
            "target_simple": self.target_simple,
            "verified_dim": "SKIPPED" if self.skipped and self.verified_dim is None else self.verified_dim,
            "new_primitive_weights": [list(w.coords) for w in self.new_primitive_weights],
            "new_primitive_drops": ["r:" + ",".join(map(str, d)) for d in self.new_primitive_drops],
            "confirmed_in_L": self.confirmed_in_L,
            "skipped": self.skipped,
            "inconsistent": self.inconsistent,
        }


def search(n: int, p: int, max_coord: int, k_max: int, verify_budget: int | None = None,
           q: int = 1, weights=None) -> list[SearchRecord]:
    """Scan dominant weights with coordinates ``<= max_coord`` and ``k <= min(k_max, p-1)``.

    The cheap combinatorial layer runs everywhere.  Where Theorem A applies
    and the target is not simple, the target's primitive weights are found by
    brute force, transported into ``L(omega)``, confirmed there, and the
    embedding is verified; all of that draws from one shared vector budget.
    ``weights`` restricts the scan to an explicit list.
    """
    check_prime(p)
    if n < 3 or max_coord < 0 or k_max < 0:
        raise InvalidParameterError("search needs n >= 3 and nonnegative bounds")
    budget = Budget(verify_budget)
    grid = weights if weights is not None else [
        Weight(c) for c in product(range(max_coord + 1), repeat=n - 1)
    ]
    records = []
    for omega in grid:
        for k in range(min(k_max, p - 1) + 1):
            rep = theorem_a(omega, p, k, q)
            simple = is_weyl_simple(rep.target, p).simple
            rec = SearchRecord(n, p, omega, k, q, rep, simple)
            if rep.applies and not simple:
                _verify_record(rec, budget)
            records.append(rec)
    return records


def _verify_record(rec: SearchRecord, budget: Budget) -> None:
    omega1 = _to_q1(rec.omega, rec.q)
    target = _target_q1(omega1, rec.k)
    try:
        drops = primitive_drops(target, rec.p, budget=budget)
    except BudgetExceeded:
        rec.skipped = True
        return
    for d in sorted(drops):
        if not any(d):
            continue
        full = (rec.k,) + d
        mu = subtract_rootsum(omega1, RootSum(full))
        if rec.q != 1:
            mu = dual_twist(mu)
            full = full[::-1]
        rec.new_primitive_drops.append(full)
        rec.new_primitive_weights.append(mu)
    try:
        emb = verify_embedding(rec.omega, rec.p, rec.k, rec.q, budget)
        if emb.skipped:
            rec.skipped = True
            return
        rec.verified_dim = emb.dim
        rec.inconsistent = not emb.is_weyl
        mod = get_module(omega1, budget)
        for full in rec.new_primitive_drops:
            d1 = full if rec.q == 1 else full[::-1]
            rec.confirmed_in_L.append(bool(mod.primitive_vectors(d1, rec.p, {1})))
    except BudgetExceeded:
        rec.skipped = True
    if rec.confirmed_in_L and not all(rec.confirmed_in_L):
        rec.inconsistent = True


__all__ = [
    "E_set",
    "TheoremAReport",
    "ConditionReport",
    "EmbeddingResult",
    "ConsistencyReport",
    "SearchRecord",
    "theorem_a",
    "theorem_b_condition",
    "verify_embedding",
    "theorem_b_consistency",
    "only_if_weights",
    "submodule_primitive_drops",
    "divisibility_holds",
    "search",
]

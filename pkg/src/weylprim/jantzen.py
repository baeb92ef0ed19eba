"""Jantzen's simplicity criterion for type-A Weyl modules.

For every positive root ``alpha`` write ``<w + rho, alpha> = a p^s + b p^(s+1)``
with ``0 < a < p``.  The Weyl module is simple iff for each ``alpha`` there are
positive roots ``beta_0, ..., beta_b`` summing to ``alpha`` with
``<w + rho, beta_0> = a p^s``, ``<w + rho, beta_i> = p^(s+1)`` and
``alpha - beta_0`` a root or zero.

In type A roots are intervals, so ``alpha - beta_0`` being a root or zero
forces ``beta_0`` to be ``alpha`` itself, a prefix or a suffix of ``alpha``.
The remaining ``beta_i`` then tile the complementary interval, and because
``w + rho`` pairs positively with every simple root the tiling is unique if it
exists.  The search below is therefore a short deterministic scan.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidParameterError, NotDominantError
from .gfp import check_prime
from .roots import PositiveRoot, Weight, is_dominant, positive_roots


@dataclass(frozen=True)
class PDecomposition:
    c: int
    p: int
    s: int
    a: int
    b: int


def p_decompose(c: int, p: int) -> PDecomposition:
    """Unique ``c = a p^s + b p^(s+1)`` with ``0 < a < p``."""
    if c <= 0:
        raise InvalidParameterError(f"p_decompose needs c >= 1, got {c}")
    s, q = 0, c
    while q % p == 0:
        q //= p
        s += 1
    return PDecomposition(c=c, p=p, s=s, a=q % p, b=q // p)


@dataclass(frozen=True)
class RootRecord:
    alpha: PositiveRoot
    decomposition: PDecomposition
    witness: tuple[PositiveRoot, ...] | None  # (beta_0, beta_1, ..., beta_b) or None = FAIL


@dataclass(frozen=True)
class SimplicityReport:
    weight: Weight
    p: int
    records: tuple[RootRecord, ...]

    @property
    def simple(self) -> bool:
        return all(r.witness is not None for r in self.records)

    @property
    def failing_roots(self) -> list[PositiveRoot]:
        return [r.alpha for r in self.records if r.witness is None]

    def to_dict(self) -> dict:
        return {
            "weight": list(self.weight.coords),
            "p": self.p,
            "simple": self.simple,
            "roots": [
                {
                    "alpha": [r.alpha.i, r.alpha.j],
                    "value": r.decomposition.c,
                    "a": r.decomposition.a,
                    "b": r.decomposition.b,
                    "s": r.decomposition.s,
                    "witness": None
                    if r.witness is None
                    else [[beta.i, beta.j] for beta in r.witness],
                }
                for r in self.records
            ],
        }


def _shifted_pairing(shifted: tuple[int, ...], i: int, j: int) -> int:
    return sum(shifted[i - 1 : j - 1])


def _tile(shifted, start: int, stop: int, pieces: int, value: int) -> list[PositiveRoot] | None:
    """Split ``[start, stop)`` into ``pieces`` consecutive intervals each pairing to ``value``."""
    out = []
    pos = start
    for _ in range(pieces):
        acc = 0
        end = pos
        while end < stop and acc < value:
            acc += shifted[end - 1]
            end += 1
        if acc != value:
            return None
        out.append(PositiveRoot(pos, end))
        pos = end
    return out if pos == stop else None


def find_witness(shifted: tuple[int, ...], alpha: PositiveRoot, dec: PDecomposition):
    """Witness chain ``(beta_0, beta_1..beta_b)`` for one root, or None."""
    target0 = dec.a * dec.p**dec.s
    big = dec.p ** (dec.s + 1)
    i, j = alpha.i, alpha.j
    if dec.b == 0:
        return (alpha,)
    # beta_0 a proper prefix [i, e) or suffix [e, j) of alpha
    for e in range(i + 1, j):
        if _shifted_pairing(shifted, i, e) == target0:
            rest = _tile(shifted, e, j, dec.b, big)
            if rest is not None:
                return (PositiveRoot(i, e), *rest)
    for e in range(j - 1, i, -1):
        if _shifted_pairing(shifted, e, j) == target0:
            rest = _tile(shifted, i, e, dec.b, big)
            if rest is not None:
                return (PositiveRoot(e, j), *rest)
    return None


def is_weyl_simple(w: Weight, p: int) -> SimplicityReport:
    """Decide simplicity of the Weyl module with highest weight ``w`` in characteristic ``p``."""
    check_prime(p)
    if not is_dominant(w):
        raise NotDominantError(f"weight {w} is not dominant")
    shifted = tuple(a + 1 for a in w.coords)
    records = []
    for alpha in positive_roots(w.rank):
        dec = p_decompose(_shifted_pairing(shifted, alpha.i, alpha.j), p)
        records.append(RootRecord(alpha, dec, find_witness(shifted, alpha, dec)))
    return SimplicityReport(w, p, tuple(records))


def check_witness(w: Weight, p: int, record: RootRecord) -> bool:
    """Re-verify the four witness conditions from scratch."""
    if record.witness is None:
        return False
    from .roots import pairing

    shifted = w + Weight.rho(w.rank)
    dec = record.decomposition
    beta0, *rest = record.witness
    if len(rest) != dec.b:
        return False
    if pairing(shifted, beta0) != dec.a * p**dec.s:
        return False
    if any(pairing(shifted, beta) != p ** (dec.s + 1) for beta in rest):
        return False
    total = [0] * w.rank
    for beta in record.witness:
        for l, c in enumerate(beta.coeffs(w.rank)):
            total[l] += c
    if tuple(total) != record.alpha.coeffs(w.rank):
        return False
    diff = [a - b for a, b in zip(record.alpha.coeffs(w.rank), beta0.coeffs(w.rank))]
    if not any(diff):
        return True
    support = [l for l, d in enumerate(diff) if d]
    return all(d in (0, 1) for d in diff) and support == list(range(support[0], support[-1] + 1))

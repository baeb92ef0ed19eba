"""Characteristic-free character data: Weyl's dimension formula and Freudenthal's recursion.

Both serve as independent oracles for the lattice construction in
:mod:`weylprim.weyl`; neither touches the ambient tensor space.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import NotDominantError
from .roots import Weight, is_dominant, positive_roots, weight_to_rootsum


def dim_weyl(omega: Weight) -> int:
    """``prod_{alpha > 0} <omega + rho, alpha> / <rho, alpha>``."""
    if not is_dominant(omega):
        raise NotDominantError(f"weight {omega} is not dominant")
    shifted = [a + 1 for a in omega.coords]
    num, den = 1, 1
    for r in positive_roots(omega.rank):
        num *= sum(shifted[r.i - 1 : r.j - 1])
        den *= r.j - r.i
    assert num % den == 0
    return num // den


def lowest_drop(omega: Weight) -> tuple[int, ...]:
    """Simple-root coordinates of ``omega - w0(omega)``, the drop to the lowest weight."""
    total = omega + Weight(omega.coords[::-1])
    coeffs = weight_to_rootsum(total)
    assert all(c.denominator == 1 for c in coeffs)
    return tuple(int(c) for c in coeffs)


def _eps(coords: tuple[int, ...]) -> list[int]:
    # fundamental coordinates -> epsilon coordinates with x_n = 0
    out = [0] * (len(coords) + 1)
    for i in range(len(coords) - 1, -1, -1):
        out[i] = out[i + 1] + coords[i]
    return out


def _scaled_norm(x: list[int]) -> int:
    # n * |x|^2 for the trace-free projection
    n = len(x)
    s = sum(x)
    return n * sum(v * v for v in x) - s * s


@lru_cache(maxsize=256)
def _freudenthal(coords: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    omega = Weight(coords)
    r = omega.rank
    n = r + 1
    if r == 0:
        return {(): 1}
    box = lowest_drop(omega)
    roots = positive_roots(r)
    lam_rho = _eps(tuple(a + 1 for a in coords))
    top = _scaled_norm(lam_rho)
    mult: dict[tuple[int, ...], int] = {}

    def eps_of(drop):
        # epsilon coordinates of omega - sum b_i alpha_i  (alpha_i = e_i - e_{i+1})
        x = _eps(coords)
        for i, b in enumerate(drop):
            x[i] -= b
            x[i + 1] += b
        return x

    drops = sorted(product(*(range(b + 1) for b in box)), key=sum)
    for drop in drops:
        if not any(drop):
            mult[drop] = 1
            continue
        x = eps_of(drop)
        xr = [v + (n - 1 - i) for i, v in enumerate(x)]  # mu + rho
        diff = top - _scaled_norm(xr)
        rhs = 0
        for root in roots:
            j = 1
            while True:
                up = list(drop)
                ok = True
                for l in range(root.i - 1, root.j - 1):
                    up[l] -= j
                    if up[l] < 0:
                        ok = False
                if not ok:
                    break
                m = mult.get(tuple(up), 0)
                if m:
                    # (mu + j alpha, alpha) = x_i - x_j + 2j
                    rhs += (x[root.i - 1] - x[root.j - 1] + 2 * j) * m
                j += 1
        if diff == 0:
            continue
        val = 2 * n * rhs
        assert val % diff == 0, (coords, drop)
        if val:
            mult[drop] = val // diff
    return mult


def weight_multiplicities(omega: Weight) -> dict[tuple[int, ...], int]:
    """Map from weight drop ``(b_1, ..., b_r)`` to ``dim Delta(omega)^{omega - sum b_i alpha_i}``.

    Only drops with positive multiplicity are present.
    """
    if not is_dominant(omega):
        raise NotDominantError(f"weight {omega} is not dominant")
    return dict(_freudenthal(omega.coords))


def multiplicity(omega: Weight, drop: tuple[int, ...]) -> int:
    return weight_multiplicities(omega).get(tuple(drop), 0)

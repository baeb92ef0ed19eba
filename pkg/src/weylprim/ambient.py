"""The ambient space ``W = (x)_k (Lambda^k V)^{(x) a_k}`` and the hyperalgebra action on it.

``V`` is the natural SL_n-module with basis ``e_1..e_n``.  A wedge
``e_{s_1} ^ ... ^ e_{s_k}`` (``s_1 < ... < s_k``) is stored as the bitmask
``sum 2**(s - 1)``.

The highest weight vector ``w+`` is symmetric under permuting tensor factors
of equal wedge degree and so is everything the hyperalgebra produces from it.
Vectors are therefore stored in the basis of orbit sums: an
:data:`AmbientIndex` is the canonical representative of an orbit, namely one
bitmask per tensor factor, grouped by wedge degree and sorted inside each
group.  The coefficient of an orbit sum equals the common coordinate of every
tensor basis element in the orbit, so integer vectors here are exactly the
integer symmetric tensors of ``W`` and reduction mod p commutes with the
identification.  The standard inner product of ``W`` (orthonormal tensor
basis) becomes ``<O(x), O(y)> = delta_{xy} |orbit(x)|``.

Divided powers act through the comultiplication
``X^(m) (u (x) v) = sum_{r+s=m} X^(r) u (x) X^(s) v``.  On a single wedge
``e_{ji}`` squares to zero, so only ``r in {0, 1}`` survives per factor.  In
the orbit basis this gives, for a source wedge ``A`` (contains ``i``, not
``j``) of multiplicity ``c_A`` moved ``r_A`` times to ``A' = A - i + j``,
the coefficient ``prod_A sign(A)^{r_A} * binom(c_{A'} + r_A, r_A)``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Mapping

from .errors import InvalidParameterError
from .roots import PositiveRoot, Weight

AmbientIndex = tuple  # flattened tuple of bitmasks, one per tensor factor


@dataclass(frozen=True)
class Layout:
    """Tensor factor pattern of ``omega``: ``a_k`` factors of wedge degree ``k``."""

    n: int
    segments: tuple[tuple[int, int], ...]  # (start, stop) per nonempty degree class
    degrees: tuple[int, ...]  # wedge degree of each segment

    @classmethod
    def of(cls, omega: Weight) -> "Layout":
        segs, degs = [], []
        pos = 0
        for k, a in enumerate(omega.coords, start=1):
            if a < 0:
                raise InvalidParameterError("ambient space needs a dominant weight")
            if a:
                segs.append((pos, pos + a))
                degs.append(k)
                pos += a
        return cls(omega.rank + 1, tuple(segs), tuple(degs))

    @property
    def nfactors(self) -> int:
        return self.segments[-1][1] if self.segments else 0

    def highest(self) -> AmbientIndex:
        out = []
        for (start, stop), k in zip(self.segments, self.degrees):
            out.extend([(1 << k) - 1] * (stop - start))
        return tuple(out)

    def validate(self, x: AmbientIndex) -> bool:
        if len(x) != self.nfactors:
            return False
        for (start, stop), k in zip(self.segments, self.degrees):
            seg = x[start:stop]
            if any(bin(b).count("1") != k or b >> self.n for b in seg):
                return False
            if list(seg) != sorted(seg):
                return False
        return True


def orbit_size(layout: Layout, x: AmbientIndex) -> int:
    return _orbit_size(layout.segments, x)


@lru_cache(maxsize=1 << 18)
def _orbit_size(segments, x) -> int:
    out = 1
    for start, stop in segments:
        out *= factorial(stop - start)
        for c in Counter(x[start:stop]).values():
            out //= factorial(c)
    return out


def index_weight(n: int, x: AmbientIndex) -> tuple[int, ...]:
    """Weight of a basis element in fundamental coordinates."""
    counts = [0] * (n + 1)
    for b in x:
        s = 1
        while b:
            if b & 1:
                counts[s] += 1
            b >>= 1
            s += 1
    return tuple(counts[i] - counts[i + 1] for i in range(1, n))


@lru_cache(maxsize=1 << 20)
def _move_basis(segments, x, src: int, dst: int, m: int):
    """``e_{dst,src}^(m)`` applied to the orbit sum of ``x``; list of ``(index, coeff)``."""
    sbit, dbit = 1 << (src - 1), 1 << (dst - 1)
    lo, hi = min(src, dst), max(src, dst)
    between = ((1 << (hi - 1)) - 1) & ~((1 << lo) - 1)
    sources = []  # (segment number, A, c_A, A', c_A', sign)
    counters = []
    for sn, (start, stop) in enumerate(segments):
        cnt = Counter(x[start:stop])
        counters.append(cnt)
        for A, cA in cnt.items():
            if A & sbit and not A & dbit:
                Ap = A ^ sbit ^ dbit
                sign = -1 if bin(A & between).count("1") & 1 else 1
                sources.append((sn, A, cA, Ap, cnt.get(Ap, 0), sign))
    if sum(s[2] for s in sources) < m:
        return ()
    out = []
    ns = len(sources)
    choice = [0] * ns

    def rec(t: int, left: int):
        if t == ns:
            if left:
                return
            coeff = 1
            changed: dict[int, Counter] = {}
            for (sn, A, cA, Ap, cAp, sign), r in zip(sources, choice):
                if r:
                    coeff *= comb(cAp + r, r)
                    if sign < 0 and r & 1:
                        coeff = -coeff
                    cnt = changed.setdefault(sn, Counter(counters[sn]))
                    cnt[A] -= r
                    cnt[Ap] += r
            y = list(x)
            for sn, cnt in changed.items():
                start, stop = segments[sn]
                y[start:stop] = sorted(cnt.elements())
            out.append((tuple(y), coeff))
            return
        cap = min(sources[t][2], left)
        for r in range(cap + 1):
            choice[t] = r
            rec(t + 1, left - r)
        choice[t] = 0

    rec(0, m)
    return tuple(out)


def move(layout: Layout, v: Mapping[AmbientIndex, int], src: int, dst: int, m: int) -> dict:
    """Apply the divided power ``e_{dst,src}^m / m!`` to an integer vector."""
    if m == 0:
        return dict(v)
    out: dict = {}
    segs = layout.segments
    for x, c in v.items():
        for y, d in _move_basis(segs, x, src, dst, m):
            s = out.get(y, 0) + c * d
            if s:
                out[y] = s
            else:
                del out[y]
    return out


def lower(layout: Layout, v, root: PositiveRoot, m: int) -> dict:
    """``X_{-root, m} v``; ``X_{-(alpha_i+...+alpha_{j-1})} = e_{j,i}``."""
    return move(layout, v, root.i, root.j, m)


def raise_(layout: Layout, v, root: PositiveRoot, m: int) -> dict:
    """``X_{root, m} v``; ``X_{alpha_i+...+alpha_{j-1}} = e_{i,j}``."""
    return move(layout, v, root.j, root.i, m)


def binom_poly(h: int, m: int) -> int:
    """``binom(h, m)`` for any integer ``h`` (polynomial in ``h``)."""
    if m < 0:
        return 0
    num = 1
    for t in range(m):
        num *= h - t
    return num // factorial(m)


def torus(layout: Layout, v, i: int, m: int) -> dict:
    """``H_{alpha_i, m} v``: scale each basis element by ``binom(<wt, alpha_i>, m)``."""
    out = {}
    for x, c in v.items():
        h = index_weight(layout.n, x)[i - 1]
        d = binom_poly(h, m) * c
        if d:
            out[x] = d
    return out


def inner(layout: Layout, u: Mapping, v: Mapping) -> int:
    """Standard inner product of ``W`` restricted to symmetric tensors."""
    if len(u) > len(v):
        u, v = v, u
    segs = layout.segments
    total = 0
    for x, c in u.items():
        d = v.get(x)
        if d:
            total += c * d * _orbit_size(segs, x)
    return total

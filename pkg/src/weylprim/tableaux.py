"""Tableau combinatorics for Weyl modules of type A.

The G^(1) conventions are the default: rows of a shape are numbered
``2, ..., n`` (the top row is row 2) and tableau entries lie in
``{2, ..., n}``.  Passing ``first=1`` gives the same combinatorics for the
whole group SL_n, which the weight-space engine uses for its tableau basis.

Internally rows are stored 0-based; ``Tableau.row(i)`` takes the
row number as drawn (top row = ``first``).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import InvalidParameterError, NotDominantError
from .roots import PositiveRoot, RootSum, Weight, is_dominant


@dataclass(frozen=True)
class Shape:
    """Row lengths ``(lambda_first, ..., lambda_n)``."""

    n: int
    lam: tuple[int, ...]
    first: int = 2

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        if len(self.lam) != self.n - self.first + 1:
            raise InvalidParameterError(
                f"shape for n={self.n}, first row {self.first} needs "
                f"{self.n - self.first + 1} parts, got {len(self.lam)}"
            )
        if any(x < 0 for x in self.lam):
            raise InvalidParameterError("negative row length")

    @property
    def size(self) -> int:
        return sum(self.lam)

    def row_length(self, i: int) -> int:
        return self.lam[i - self.first]

    def cells(self) -> list[tuple[int, int]]:
        """The diagram ``[lambda]`` as (row, column) pairs, columns 1-based."""
        return [
            (i, j)
            for i in range(self.first, self.n + 1)
            for j in range(1, self.row_length(i) + 1)
        ]

    def shrink_top(self, l: int) -> "Shape":
        lam = (self.lam[0] - l,) + self.lam[1:]
        return Shape(self.n, lam, self.first)


@dataclass(frozen=True)
class Tableau:
    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if tuple(len(r) for r in rows) != self.shape.lam:
            raise InvalidParameterError("tableau rows do not match the shape")
        lo, hi = self.shape.first, self.shape.n
        if any(not lo <= x <= hi for r in rows for x in r):
            raise InvalidParameterError(f"tableau entries must lie in {{{lo},...,{hi}}}")

    @classmethod
    def from_rows(cls, n: int, rows: Sequence[Sequence[int]], first: int = 2) -> "Tableau":
        rows = [tuple(r) for r in rows]
        rows += [()] * (n - first + 1 - len(rows))
        return cls(Shape(n, tuple(len(r) for r in rows), first), tuple(rows))

    @property
    def n(self) -> int:
        return self.shape.n

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i - self.shape.first]

    def __getitem__(self, cell: tuple[int, int]) -> int:
        i, j = cell
        return self.rows[i - self.shape.first][j - 1]

    def counts(self) -> dict[tuple[int, int], int]:
        """``N_{a,b}``: number of entries ``b`` in row ``a``."""
        out: dict[tuple[int, int], int] = {}
        for offset, r in enumerate(self.rows):
            a = self.shape.first + offset
            for b, c in Counter(r).items():
                out[(a, b)] = c
        return out

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows if r)


class _Undefined:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __bool__(self):
        return False

    def __repr__(self):
        return "UNDEFINED"


UNDEFINED = _Undefined()


# --------------------------------------------------------------------------
# shapes


def coherent_shape(kappa: Weight, first: int = 2) -> Shape:
    """The shape with last part 0 whose consecutive differences are the coordinates of ``kappa``.

    ``kappa`` is a dominant weight of the subsystem on roots
    ``alpha_first, ..., alpha_{n-1}`` (so ``n = kappa.rank + first``).
    """
    if not is_dominant(kappa):
        raise NotDominantError(f"weight {kappa} is not dominant")
    n = kappa.rank + first
    lam = [0]
    for d in reversed(kappa.coords):
        lam.append(lam[-1] + d)
    return Shape(n, tuple(reversed(lam)), first)


# --------------------------------------------------------------------------
# predicates


def is_row_standard(t: Tableau) -> bool:
    return all(all(r[j] <= r[j + 1] for j in range(len(r) - 1)) for r in t.rows)


def is_regular_row_standard(t: Tableau) -> bool:
    if not is_row_standard(t):
        return False
    return all(x >= t.shape.first + offset for offset, r in enumerate(t.rows) for x in r)


def is_standard(t: Tableau) -> bool:
    if not is_row_standard(t):
        return False
    for upper, lower in zip(t.rows, t.rows[1:]):
        if any(lower[j] <= upper[j] for j in range(len(lower))):
            return False
    return True


# --------------------------------------------------------------------------
# enumeration


def _fill(shape: Shape, content: Counter | None, column_strict: bool) -> Iterator[Tableau]:
    lo, hi = shape.first, shape.n
    lam = shape.lam
    cells = [(r, c) for r in range(len(lam)) for c in range(lam[r])]
    grid = [[0] * l for l in lam]
    remaining = Counter(content) if content is not None else None

    def rec(pos: int):
        if pos == len(cells):
            yield Tableau(shape, tuple(tuple(r) for r in grid))
            return
        r, c = cells[pos]
        start = lo
        if c > 0:
            start = max(start, grid[r][c - 1])
        if column_strict and r > 0:
            start = max(start, grid[r - 1][c] + 1)
        elif not column_strict:
            start = max(start, lo + r)
        for v in range(start, hi + 1):
            if remaining is not None:
                if remaining[v] == 0:
                    continue
                remaining[v] -= 1
            grid[r][c] = v
            yield from rec(pos + 1)
            if remaining is not None:
                remaining[v] += 1
        grid[r][c] = 0

    if remaining is not None and sum(remaining.values()) != shape.size:
        return
    yield from rec(0)


def enumerate_standard(shape: Shape, content: dict[int, int] | None = None) -> list[Tableau]:
    """All standard tableaux of ``shape`` in lexicographic (row-major) order.

    ``content`` optionally fixes how many times each entry occurs.
    """
    return list(_fill(shape, Counter(content) if content is not None else None, True))


def enumerate_regular_row_standard(shape: Shape) -> list[Tableau]:
    return list(_fill(shape, None, False))


def content_for_drop(shape: Shape, drop: Sequence[int]) -> dict[int, int] | None:
    """Entry multiplicities of tableaux ``t`` of ``shape`` whose ``F_t`` has the given weight drop.

    ``drop[l]`` is the coefficient of ``alpha_{first+l}``.  The coefficient of
    ``alpha_i`` equals (cells in rows ``<= i``) minus (entries ``<= i``) for a
    standard tableau.  Returns None when no content fits.
    """
    first, n = shape.first, shape.n
    if len(drop) != n - first:
        raise InvalidParameterError("drop has the wrong length for this shape")
    cum_cells = 0
    prev_le = 0
    content = {}
    for offset, i in enumerate(range(first, n)):
        cum_cells += shape.lam[offset]
        le = cum_cells - drop[offset]
        c = le - prev_le
        if c < 0:
            return None
        content[i] = c
        prev_le = le
    c = shape.size - prev_le
    if c < 0:
        return None
    content[n] = c
    return content


# --------------------------------------------------------------------------
# F_t monomials


def _factor_key(root: PositiveRoot) -> tuple[int, int]:
    # (a,b) precedes (c,d) iff b < d, or b = d and a < c
    return (root.j, root.i)


@dataclass(frozen=True)
class FMonomial:
    """Ordered product of lowering divided powers ``X_{-(a..b-1), N}``."""

    factors: tuple[tuple[PositiveRoot, int], ...]

    def __post_init__(self):
        factors = tuple((r, int(N)) for r, N in self.factors)
        if any(N <= 0 for _, N in factors):
            raise InvalidParameterError("FMonomial multiplicities must be positive")
        keys = [_factor_key(r) for r, _ in factors]
        if keys != sorted(keys) or len(set(keys)) != len(keys):
            raise InvalidParameterError("FMonomial factors out of canonical order")
        object.__setattr__(self, "factors", factors)

    @staticmethod
    def precedes(r1: PositiveRoot, r2: PositiveRoot) -> bool:
        return _factor_key(r1) < _factor_key(r2)

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for r, N in self.factors:
            name = "-" + "-".join(f"a{l}" for l in range(r.i, r.j))
            parts.append(f"X[{name}]" if N == 1 else f"X[{name},{N}]")
        return " ".join(parts)


def f_monomial(t: Tableau) -> FMonomial:
    counts = t.counts()
    factors = [
        (PositiveRoot(a, b), N) for (a, b), N in counts.items() if a < b and N > 0
    ]
    factors.sort(key=lambda f: _factor_key(f[0]))
    return FMonomial(tuple(factors))


def weight_of(t: Tableau) -> RootSum:
    """Weight drop of ``F_t`` as nonnegative coefficients of ``alpha_first, ..., alpha_{n-1}``."""
    first, n = t.shape.first, t.shape.n
    coeffs = [0] * (n - first)
    for root, N in f_monomial(t).factors:
        for l in range(root.i, root.j):
            coeffs[l - first] += N
    return RootSum(tuple(coeffs))


def top_row_excess(t: Tableau) -> int:
    """Number of entries greater than the top row index in the top row."""
    return sum(1 for x in t.rows[0] if x > t.shape.first)


# --------------------------------------------------------------------------
# removal maps


def _check_rho_pre(t: Tableau, l: int) -> None:
    if t.shape.first != 2:
        raise InvalidParameterError("rho maps are defined on G^(1) tableaux (first row 2)")
    if not is_regular_row_standard(t):
        raise InvalidParameterError("rho maps need a regular row standard tableau")
    lam = t.shape.lam
    d2 = lam[0] - (lam[1] if len(lam) > 1 else 0)
    if d2 < l:
        raise InvalidParameterError(f"need lambda_2 - lambda_3 >= {l}, have {d2}")


def rho_m(t: Tableau, m: int):
    """Remove one entry ``m`` from the top row; UNDEFINED if there is none."""
    return rho_M(t, (m,))


def rho_M(t: Tableau, M: Sequence[int]):
    """Remove the entries of ``M`` (with multiplicity) from the top row, shifting left."""
    M = tuple(M)
    if any(m < 3 for m in M):
        raise InvalidParameterError("rho entries must be >= 3")
    _check_rho_pre(t, len(M))
    top = list(t.rows[0])
    for m in M:
        if m not in top:
            return UNDEFINED
        top.remove(m)
    shape = t.shape.shrink_top(len(M))
    return Tableau(shape, (tuple(top),) + t.rows[1:])

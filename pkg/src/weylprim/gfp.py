"""Exact linear algebra over the prime field GF(p).

Two layers live here.  The sparse layer (``SparseIntVector`` = plain dict of
arbitrary-precision ints, :class:`GFpVector`, :class:`GFpMatrix`) is keyed by
arbitrary hashable indices, typically ambient tensor indices.  The dense layer
works on ``int64`` numpy arrays whose entries are residues in ``[0, p)``; it
is what the weight-space computations use once a column set is fixed.

Primes must satisfy ``p < 2**31`` so that products of residues fit in int64.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping, Sequence

import numpy as np

from .errors import InvalidParameterError

SparseIntVector = dict  # index -> int, no stored zeros

_MAX_P = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def check_prime(p: int) -> int:
    if not is_prime(p) or p >= _MAX_P:
        raise InvalidParameterError(f"{p} is not a supported prime")
    return p


# --------------------------------------------------------------------------
# sparse vectors


def sparse_add(u: Mapping, v: Mapping, c: int = 1) -> dict:
    """``u + c*v`` over the integers."""
    out = dict(u)
    for key, val in v.items():
        s = out.get(key, 0) + c * val
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def sparse_scale(v: Mapping, c: int) -> dict:
    if c == 0:
        return {}
    return {key: c * val for key, val in v.items()}


@dataclass(frozen=True)
class GFpVector:
    p: int
    entries: Mapping[Hashable, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: v % self.p for k, v in self.entries.items() if v % self.p}
        object.__setattr__(self, "entries", clean)

    def __add__(self, other: "GFpVector") -> "GFpVector":
        _same_p(self.p, other.p)
        return GFpVector(self.p, sparse_add(self.entries, other.entries))

    def __sub__(self, other: "GFpVector") -> "GFpVector":
        _same_p(self.p, other.p)
        return GFpVector(self.p, sparse_add(self.entries, other.entries, -1))

    def __mul__(self, c: int) -> "GFpVector":
        return GFpVector(self.p, sparse_scale(self.entries, c))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GFpVector)
            and self.p == other.p
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.p, frozenset(self.entries.items())))

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)


def reduce_mod_p(v: Mapping[Hashable, int], p: int) -> GFpVector:
    return GFpVector(p, v)


def _same_p(p: int, q: int) -> None:
    if p != q:
        raise InvalidParameterError(f"mixed characteristics {p} and {q}")


@dataclass(frozen=True)
class GFpMatrix:
    """Rows of GF(p) vectors over an explicit column universe.

    ``columns`` defaults to the sorted union of the row supports.  Supply it
    when the space has coordinates no row touches (e.g. the zero matrix).
    """

    p: int
    rows: tuple[GFpVector, ...] = ()
    columns: tuple[Hashable, ...] | None = None

    def __post_init__(self):
        rows = tuple(self.rows)
        for r in rows:
            _same_p(self.p, r.p)
        object.__setattr__(self, "rows", rows)
        if self.columns is None:
            keys: set = set()
            for r in rows:
                keys.update(r.entries)
            object.__setattr__(self, "columns", tuple(sorted(keys)))
        else:
            object.__setattr__(self, "columns", tuple(self.columns))

    def dense(self) -> np.ndarray:
        return to_dense([r.entries for r in self.rows], self.columns, self.p)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.columns)


def to_dense(
    vectors: Sequence[Mapping[Hashable, int]],
    columns: Sequence[Hashable] | Mapping[Hashable, int],
    p: int,
) -> np.ndarray:
    """Dense residue matrix with one row per vector."""
    index = columns if isinstance(columns, Mapping) else {c: i for i, c in enumerate(columns)}
    out = np.zeros((len(vectors), len(index)), dtype=np.int64)
    for r, v in enumerate(vectors):
        for key, val in v.items():
            out[r, index[key]] = val % p
    return out


def from_dense(row: np.ndarray, columns: Sequence[Hashable], p: int) -> GFpVector:
    nz = np.nonzero(row)[0]
    return GFpVector(p, {columns[i]: int(row[i]) for i in nz})


# --------------------------------------------------------------------------
# dense elimination


def rref(a: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over GF(p) with first-nonzero pivoting.

    Returns the nonzero rows of the RREF and the pivot column list.
    """
    m = np.array(a, dtype=np.int64) % p
    nrows, ncols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), -1, p)
        m[r] = (m[r] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        rows = np.nonzero(col)[0]
        if rows.size:
            m[rows] = (m[rows] - np.outer(col[rows], m[r])) % p
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank_dense(a: np.ndarray, p: int) -> int:
    if a.size == 0:
        return 0
    # eliminate along the shorter side
    if a.shape[0] > a.shape[1]:
        a = a.T
    return len(rref(a, p)[1])


def nullspace_dense(a: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : a @ x = 0}`` over GF(p), in reduced form."""
    ncols = a.shape[1]
    if a.shape[0] == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(a, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, pc in enumerate(pivots):
            basis[t, pc] = (-r[row, f]) % p
    return basis


def left_nullspace_dense(a: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{y : y @ a = 0}``."""
    return nullspace_dense(np.ascontiguousarray(a.T), p)


def independent_rows(a: np.ndarray, p: int) -> list[int]:
    """Indices of the first maximal set of rows independent over GF(p)."""
    if a.shape[0] == 0:
        return []
    return rref(np.ascontiguousarray(a.T), p)[1]


def dense_in_span(v: np.ndarray, basis: np.ndarray, p: int) -> bool:
    if basis.shape[0] == 0:
        return not np.any(v % p)
    return rank_dense(np.vstack([basis, v]), p) == rank_dense(basis, p)


# --------------------------------------------------------------------------
# sparse front end


def rank(m: GFpMatrix) -> int:
    return rank_dense(m.dense(), m.p)


def kernel(m: GFpMatrix) -> list[GFpVector]:
    """Right kernel ``{x : m x = 0}``; vectors are keyed by ``m.columns``."""
    ns = nullspace_dense(m.dense(), m.p)
    return [from_dense(row, m.columns, m.p) for row in ns]


def echelon(m: GFpMatrix) -> GFpMatrix:
    """Row space basis in reduced echelon form (deterministic)."""
    r, _ = rref(m.dense(), m.p)
    return GFpMatrix(m.p, tuple(from_dense(row, m.columns, m.p) for row in r), m.columns)


def in_span(v: GFpVector, basis: Iterable[GFpVector]) -> bool:
    basis = list(basis)
    keys = set(v.entries)
    for b in basis:
        _same_p(v.p, b.p)
        keys.update(b.entries)
    cols = sorted(keys)
    return dense_in_span(
        to_dense([v.entries], cols, v.p)[0],
        to_dense([b.entries for b in basis], cols, v.p),
        v.p,
    )


def grow_span(basis: GFpMatrix, candidates: Iterable[GFpVector]) -> GFpMatrix:
    """Echelon basis of ``span(basis) + span(candidates)``."""
    candidates = tuple(candidates)
    cols = set(basis.columns)
    for c in candidates:
        _same_p(basis.p, c.p)
        cols.update(c.entries)
    return echelon(GFpMatrix(basis.p, basis.rows + candidates, tuple(sorted(cols))))

"""Root and weight lattice arithmetic for type A_{n-1}.

Weights are stored in the fundamental-weight basis, root sums in the
simple-root basis.  Nothing converts between the two implicitly: use
:func:`subtract_rootsum` / :func:`rootsum_to_weight`.

Positive roots of SL_n are intervals ``(i, j)`` with ``1 <= i < j <= n``,
standing for ``alpha_i + ... + alpha_{j-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InvalidParameterError, MalformedInputError, RankMismatchError, RankUnderflowError


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight ``a_1 w_1 + ... + a_r w_r`` of a rank-``r`` type-A lattice."""

    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def parse(cls, text: str) -> "Weight":
        text = text.strip()
        if not text:
            raise MalformedInputError("empty weight string")
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise MalformedInputError(f"malformed weight {text!r}") from exc

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> "Weight":
        """The fundamental weight ``w_i`` (1-based)."""
        if not 1 <= i <= rank:
            raise RankMismatchError(f"no fundamental weight {i} in rank {rank}")
        return cls(tuple(int(l == i) for l in range(1, rank + 1)))

    @classmethod
    def rho(cls, rank: int) -> "Weight":
        return cls((1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def n(self) -> int:
        return len(self.coords) + 1

    def __add__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.coords))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


@dataclass(frozen=True, order=True)
class PositiveRoot:
    """The positive root ``alpha_i + ... + alpha_{j-1}``."""

    i: int
    j: int

    def __post_init__(self):
        if not (1 <= self.i < self.j):
            raise InvalidParameterError(f"invalid positive root ({self.i},{self.j})")

    @classmethod
    def simple(cls, i: int) -> "PositiveRoot":
        return cls(i, i + 1)

    @property
    def height(self) -> int:
        return self.j - self.i

    def coeffs(self, rank: int) -> tuple[int, ...]:
        """Coefficients in the simple-root basis."""
        if self.j > rank + 1:
            raise RankMismatchError(f"root ({self.i},{self.j}) outside rank {rank}")
        return tuple(int(self.i <= l < self.j) for l in range(1, rank + 1))

    def as_rootsum(self, rank: int) -> "RootSum":
        return RootSum(self.coeffs(rank))

    def __str__(self) -> str:
        return f"({self.i},{self.j})"


@dataclass(frozen=True, order=True)
class RootSum:
    """``b_1 alpha_1 + ... + b_r alpha_r`` in the simple-root basis."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def parse(cls, text: str) -> "RootSum":
        text = text.strip()
        if text.startswith("r:"):
            text = text[2:]
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise MalformedInputError(f"malformed root sum {text!r}") from exc

    @classmethod
    def zero(cls, rank: int) -> "RootSum":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coeffs)

    @property
    def height(self) -> int:
        return sum(self.coeffs)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "RootSum") -> "RootSum":
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} != {other.rank}")
        return RootSum(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "RootSum") -> "RootSum":
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} != {other.rank}")
        return RootSum(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, c: int) -> "RootSum":
        return RootSum(tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __str__(self) -> str:
        return "r:" + ",".join(str(c) for c in self.coeffs)


def _same_rank(w1: Weight, w2: Weight) -> None:
    if w1.rank != w2.rank:
        raise RankMismatchError(f"rank {w1.rank} != {w2.rank}")


def positive_roots(rank: int) -> list[PositiveRoot]:
    """All positive roots of A_rank, ordered by (i, j)."""
    return [PositiveRoot(i, j) for i, j in combinations(range(1, rank + 2), 2)]


def cartan_matrix(rank: int) -> list[list[int]]:
    return [
        [2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(rank)]
        for i in range(rank)
    ]


def pairing(w: Weight, r: PositiveRoot) -> int:
    """``<w, alpha_i + ... + alpha_{j-1}>`` = ``a_i + ... + a_{j-1}``."""
    if r.j > w.rank + 1:
        raise RankMismatchError(f"root {r} outside rank {w.rank}")
    return sum(w.coords[r.i - 1 : r.j - 1])


def rootsum_to_weight(s: RootSum) -> Weight:
    """Express a root sum in the fundamental-weight basis via the Cartan matrix."""
    c = s.coeffs
    r = len(c)
    return Weight(
        tuple(
            2 * c[l] - (c[l - 1] if l > 0 else 0) - (c[l + 1] if l + 1 < r else 0)
            for l in range(r)
        )
    )


def weight_to_rootsum(w: Weight) -> tuple[Fraction, ...]:
    """Simple-root coordinates of ``w`` (rational in general)."""
    r = w.rank
    n = r + 1
    # inverse Cartan matrix of A_r: min(i,j) * (n - max(i,j)) / n
    return tuple(
        sum(
            Fraction(min(i, j) * (n - max(i, j)), n) * w.coords[j - 1]
            for j in range(1, r + 1)
        )
        for i in range(1, r + 1)
    )


def add(w1: Weight, w2: Weight) -> Weight:
    return w1 + w2


def subtract_rootsum(w: Weight, s: RootSum) -> Weight:
    if w.rank != s.rank:
        raise RankMismatchError(f"rank {w.rank} != {s.rank}")
    return w - rootsum_to_weight(s)


def is_dominant(w: Weight) -> bool:
    return all(c >= 0 for c in w.coords)


def restrict_q1(w: Weight) -> Weight:
    """Restriction to the torus of G^(1): drop the first coordinate.

    The result is written in the basis ``w̄_2, ..., w̄_{n-1}`` of the
    A_{n-2} subsystem on ``alpha_2, ..., alpha_{n-1}``.
    """
    if w.rank < 2:
        raise RankUnderflowError("restriction to G^(1) needs rank >= 2")
    return Weight(w.coords[1:])


def restrict_qlast(w: Weight) -> Weight:
    """Restriction to the torus of G^(n-1): drop the last coordinate."""
    if w.rank < 2:
        raise RankUnderflowError("restriction to G^(n-1) needs rank >= 2")
    return Weight(w.coords[:-1])


def dual_twist(w: Weight) -> Weight:
    """Image of ``w`` under ``g -> w0 (g^-1)^t w0^-1``: reverse the coordinates."""
    return Weight(w.coords[::-1])


def dual_twist_rootsum(s: RootSum) -> RootSum:
    return RootSum(s.coeffs[::-1])


def E_set(n: int, k: int) -> set[RootSum]:
    """``{b_1 alpha_1 + ... + b_{n-1} alpha_{n-1} : k = b_1 >= b_2 >= ... >= b_{n-1} >= 0}``."""
    if n < 2 or k < 0:
        raise InvalidParameterError("E_set needs n >= 2 and k >= 0")
    out: set[RootSum] = set()

    def extend(prefix: tuple[int, ...]) -> None:
        if len(prefix) == n - 1:
            out.add(RootSum(prefix))
            return
        for b in range(prefix[-1] + 1):
            extend(prefix + (b,))

    extend((k,))
    return out


def in_E_set(s: RootSum, k: int) -> bool:
    c = s.coeffs
    return bool(c) and c[0] == k and all(c[l] >= c[l + 1] for l in range(len(c) - 1)) and c[-1] >= 0


def in_staircase(s: RootSum, k: int) -> bool:
    """Staircase condition on the restricted group: ``k >= b_2 >= ... >= b_{n-1} >= 0``."""
    c = s.coeffs
    if not c:
        return True
    return c[0] <= k and c[-1] >= 0 and all(c[l] >= c[l + 1] for l in range(len(c) - 1))

"""Prouhet-Tarry-Escott pairs: power sums, degree certificates and parametric families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Union

from .exactalg import Polynomial


@dataclass(frozen=True, order=True)
class IntMultiset:
    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(sorted(int(v) for v in self.values))
        if not vals:
            raise ValueError("multiset must be nonempty")
        object.__setattr__(self, "values", vals)

    @classmethod
    def of(cls, *values: int) -> IntMultiset:
        return cls(values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.values)) + "}"


def _ms(s) -> IntMultiset:
    return s if isinstance(s, IntMultiset) else IntMultiset(tuple(s))


@dataclass(frozen=True)
class Exact:
    """Power sums agree for e = 1..k and differ at e = k + 1.

    ``difference`` is the certificate sum(A^(k+1)) - sum(B^(k+1)); it is
    excluded from equality because affine maps rescale it.
    """

    k: int
    difference: int = field(default=0, compare=False)

    @property
    def witness_exponent(self) -> int:
        return self.k + 1

    def __str__(self) -> str:
        return f"Exact({self.k})"


@dataclass(frozen=True)
class IdenticalMultisets:
    def __str__(self) -> str:
        return "IdenticalMultisets"


DegreeResult = Union[Exact, IdenticalMultisets]


def power_sum(s: Iterable[int], e: int) -> int:
    if e < 1:
        raise ValueError("exponent must be >= 1")
    return sum(v**e for v in s)


def pte_degree(A, B, probe_limit: int | None = None) -> DegreeResult:
    """Degree of agreement of two equal-size multisets.

    Newton's identities: power sums 1..m fix the elementary symmetric
    functions, hence the multiset, so distinct multisets of size m must
    disagree at some e <= m and the probe always terminates.
    """
    A, B = _ms(A), _ms(B)
    m = len(A)
    if len(B) != m:
        raise ValueError(f"size mismatch: {m} vs {len(B)}")
    if probe_limit is None:
        probe_limit = m
    if probe_limit < m:
        raise ValueError(f"probe_limit {probe_limit} is below the size {m}")
    if A == B:
        return IdenticalMultisets()
    for e in range(1, probe_limit + 1):
        diff = power_sum(A, e) - power_sum(B, e)
        if diff:
            return Exact(e - 1, diff)
    raise AssertionError("distinct multisets agreed on all power sums up to their size")


@dataclass(frozen=True)
class PTEPair:
    A: IntMultiset
    B: IntMultiset
    degree: DegreeResult = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "A", _ms(self.A))
        object.__setattr__(self, "B", _ms(self.B))
        object.__setattr__(self, "degree", pte_degree(self.A, self.B))

    @property
    def size(self) -> int:
        return len(self.A)

    def __str__(self) -> str:
        return f"{self.A} ={self.degree} {self.B}"


def is_ideal(pair: PTEPair) -> bool:
    return isinstance(pair.degree, Exact) and pair.degree.k == pair.size - 1


def affine_transform(pair: PTEPair, M: int, K: int) -> PTEPair:
    return PTEPair(IntMultiset(tuple(M * v + K for v in pair.A)), IntMultiset(tuple(M * v + K for v in pair.B)))


def monic_from_roots(values: Iterable[int]) -> Polynomial:
    p = Polynomial([1])
    for v in values:
        p = p * Polynomial([-v, 1])
    return p


def poly_criterion(A, B) -> tuple[Polynomial, DegreeResult]:
    """``prod(z - a_i) - prod(z - b_i)`` and the degree it implies.

    The coefficient of z^(m-j) in the difference is (-1)^j (e_j(A) - e_j(B)),
    so deg(diff) = m - k - 1 where k + 1 is the first disagreeing power sum.
    """
    A, B = _ms(A), _ms(B)
    m = len(A)
    if len(B) != m:
        raise ValueError(f"size mismatch: {m} vs {len(B)}")
    diff = monic_from_roots(A) - monic_from_roots(B)
    if diff.is_zero():
        return diff, IdenticalMultisets()
    return diff, Exact(m - 1 - diff.degree)


def euler_family(a: int, b: int, c: int) -> PTEPair:
    return PTEPair(IntMultiset((a, b, c, a + b + c)), IntMultiset((a + b, a + c, b + c, 0)))


CHERNICK_LABELS = ("a", "b", "c", "d", "e", "f", "p", "q", "r", "s", "t", "u")

# (m^2, mn, n^2) coefficients of each quadratic form
CHERNICK_FORMS = {
    "a": (-5, 4, -3),
    "b": (-3, 6, 5),
    "c": (-1, -10, -1),
    "d": (5, -4, 3),
    "e": (3, -6, -5),
    "f": (1, 10, 1),
    "p": (-5, 6, 3),
    "q": (-3, -4, -5),
    "r": (-1, 10, -1),
    "s": (5, -6, -3),
    "t": (3, 4, 5),
    "u": (1, -10, 1),
}


@dataclass(frozen=True)
class ChernickTuple:
    m: int
    n: int
    a: int
    b: int
    c: int
    d: int
    e: int
    f: int
    p: int
    q: int
    r: int
    s: int
    t: int
    u: int

    def values(self) -> tuple[int, ...]:
        return tuple(getattr(self, name) for name in CHERNICK_LABELS)

    def left(self) -> tuple[int, ...]:
        return (self.a, self.b, self.c, self.d, self.e, self.f)

    def right(self) -> tuple[int, ...]:
        return (self.p, self.q, self.r, self.s, self.t, self.u)


def chernick(m: int, n: int) -> ChernickTuple:
    vals = {k: x * m * m + y * m * n + z * n * n for k, (x, y, z) in CHERNICK_FORMS.items()}
    return ChernickTuple(m=m, n=n, **vals)


def chernick_pair(t: ChernickTuple) -> PTEPair:
    return PTEPair(IntMultiset(t.left()), IntMultiset(t.right()))

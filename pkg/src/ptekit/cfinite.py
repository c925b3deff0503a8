"""C-finite sequences: rational generating functions <-> linear recurrences.

A :class:`CFiniteSeq` of order d stores ``rec = (c_1, .., c_d)`` and
``init = (s_0, .., s_{d-1})`` with ``s_n = c_1 s_{n-1} + ... + c_d s_{n-d}``
for every n >= d.  Trailing zero coefficients are allowed; they encode a
generating function whose numerator degree reaches the denominator degree.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Iterator, Sequence

from .exactalg import Polynomial, RationalGF, Scalar, _canon, poly_divmod, resultant


class NonIntegralSeries(ArithmeticError):
    """Raised when an integer stream meets a non-integral coefficient."""

    def __init__(self, index: int, value: Fraction | None = None):
        self.index = index
        self.value = value
        detail = f" ({value})" if value is not None else ""
        super().__init__(f"coefficient {index} is not an integer{detail}")


class InsufficientData(ValueError):
    pass


class NotFound(LookupError):
    pass


def _as_int(value: Scalar, index: int, rational: bool) -> Scalar:
    value = _canon(value)
    if not rational and not isinstance(value, int):
        raise NonIntegralSeries(index, value)
    return value


# -- streams -------------------------------------------------------------


class GFStream:
    """Pull-based coefficient cursor over a rational function.

    Holds only the last ``deg(den)`` coefficients, so memory is O(order).
    """

    def __init__(self, gf: RationalGF, rational: bool = False):
        self.num = gf.num
        self.den = gf.den
        self.rational = rational
        self.index = 0
        self._window: list[Scalar] = []  # most recent first

    def __iter__(self) -> GFStream:
        return self

    def __next__(self) -> Scalar:
        q = self.den.coeffs
        n = self.index
        acc = self.num[n]
        for i in range(1, min(len(q), n + 1)):
            acc -= q[i] * self._window[i - 1]
        q0 = q[0]
        if isinstance(acc, int) and acc % q0 == 0:
            c = acc // q0
        else:
            c = _as_int(Fraction(acc) / q0, n, self.rational)
        if len(q) > 1:
            self._window.insert(0, c)
            del self._window[len(q) - 1 :]
        self.index += 1
        return c

    def copy(self) -> GFStream:
        other = GFStream.__new__(GFStream)
        other.num, other.den, other.rational = self.num, self.den, self.rational
        other.index = self.index
        other._window = list(self._window)
        return other


class RecStream:
    """Pull-based cursor iterating a recurrence from its initial terms."""

    def __init__(self, rec: Sequence[Scalar], init: Sequence[Scalar], rational: bool = False):
        self.rec = tuple(rec)
        self.rational = rational
        self.index = 0
        self._window = list(init)  # oldest first, length d

    def __iter__(self) -> RecStream:
        return self

    def __next__(self) -> Scalar:
        w = self._window
        value = w[0]
        nxt = sum(c * w[-1 - i] for i, c in enumerate(self.rec))
        w.pop(0)
        w.append(_as_int(nxt, self.index + len(self.rec), True))
        self.index += 1
        return _as_int(value, self.index - 1, self.rational)

    def copy(self) -> RecStream:
        other = RecStream.__new__(RecStream)
        other.rec, other.rational, other.index = self.rec, self.rational, self.index
        other._window = list(self._window)
        return other


# -- sequences ----------------------------------------------------------------


@dataclass(frozen=True)
class CFiniteSeq:
    rec: tuple[Scalar, ...]
    init: tuple[Scalar, ...]
    gf: RationalGF | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        rec = tuple(_canon(Fraction(c)) for c in self.rec)
        init = tuple(_canon(Fraction(c)) for c in self.init)
        if len(rec) != len(init) or not rec:
            raise ValueError(f"order mismatch: rec {len(rec)} vs init {len(init)} (need >= 1)")
        object.__setattr__(self, "rec", rec)
        object.__setattr__(self, "init", init)
        if self.gf is None:
            object.__setattr__(self, "gf", from_recurrence(self))

    @property
    def order(self) -> int:
        return len(self.rec)

    @classmethod
    def constant(cls, c: int) -> CFiniteSeq:
        return cls((1,), (c,))

    @classmethod
    def zero(cls) -> CFiniteSeq:
        return cls((0,), (0,))

    @classmethod
    def from_gf(cls, gf: RationalGF) -> CFiniteSeq:
        return to_recurrence(gf)

    def stream(self, rational: bool = False) -> RecStream:
        return RecStream(self.rec, self.init, rational)

    def terms(self, n: int, rational: bool = False) -> list[Scalar]:
        s = self.stream(rational)
        return [next(s) for _ in range(n)]

    def __getitem__(self, k: int) -> Scalar:
        s = self.stream()
        for _ in range(k):
            next(s)
        return next(s)

    def char_poly(self) -> Polynomial:
        """Integral ``y^d - c_1 y^(d-1) - ... - c_d`` scaled to clear denominators."""
        coeffs = [-c for c in reversed(self.rec)] + [1]
        scale = lcm(*(Fraction(c).denominator for c in coeffs))
        return Polynomial([c * scale for c in coeffs])

    def recurrence_text(self, var: str = "s") -> str:
        parts = []
        for i, c in enumerate(self.rec, start=1):
            if c == 0:
                continue
            mag = abs(c)
            mag_s = "" if mag == 1 else f"{mag} "
            parts.append(("-" if c < 0 else "+", f"{mag_s}{var}_{{n-{i}}}"))
        if not parts:
            return f"{var}_n = 0"
        body = " ".join(f"{sg} {t}" for sg, t in parts)
        body = body[2:] if body.startswith("+ ") else "-" + body[2:]
        return f"{var}_n = {body}"


# -- conversions -------------------------------------------------------------


def expand(gf: RationalGF, n: int, rational: bool = False) -> list[Scalar]:
    """First n power-series coefficients of ``gf``.

    Uses ``den[0]*c_n = num_n - sum_{i>=1} den_i c_{n-i}``; raises
    :class:`NonIntegralSeries` unless ``rational`` is set.
    """
    s = GFStream(gf, rational)
    return [next(s) for _ in range(n)]


def to_recurrence(gf: RationalGF) -> CFiniteSeq:
    q = gf.den
    d = max(1, q.degree, gf.num.degree + 1)
    q0 = Fraction(q[0])
    rec = [-q[i] / q0 for i in range(1, d + 1)]
    return CFiniteSeq(tuple(rec), tuple(expand(gf, d, rational=True)), gf)


def from_recurrence(seq: CFiniteSeq) -> RationalGF:
    d = seq.order
    den = Polynomial([1] + [-c for c in seq.rec])
    num = (den * Polynomial(seq.init)).truncate(d)
    return RationalGF(num, den)


# -- algebra ------------------------------------------------------------------


def combine(a: CFiniteSeq, b: CFiniteSeq, alpha: Scalar = 1, beta: Scalar = 1) -> CFiniteSeq:
    """Termwise ``alpha*a + beta*b``."""
    return to_recurrence(a.gf.scale(alpha) + b.gf.scale(beta))


def linear_combination(pairs: Sequence[tuple[Scalar, CFiniteSeq]]) -> CFiniteSeq:
    total = RationalGF(0)
    for coef, seq in pairs:
        total = total + seq.gf.scale(coef)
    return to_recurrence(total)


def shift(a: CFiniteSeq, t: int) -> CFiniteSeq:
    """Drop the first t terms: ``(G(x) - sum_{k<t} s_k x^k) / x^t``."""
    if t < 0:
        raise ValueError("shift must be nonnegative")
    if t == 0:
        return a
    gf = a.gf
    head = Polynomial(expand(gf, t, rational=True))
    rest = gf.num - gf.den * head
    if any(rest[i] != 0 for i in range(t)):
        raise ArithmeticError("series head did not cancel")
    return to_recurrence(RationalGF(rest.shift(-t), gf.den))


def product_char_poly(a: CFiniteSeq, b: CFiniteSeq) -> Polynomial:
    """Polynomial whose roots are the pairwise products of characteristic roots.

    ``Res_y(P(y), y^e Q(x/y))`` with P, Q the characteristic polynomials of
    a and b and e = deg Q.
    """
    p, q = a.char_poly(), b.char_poly()
    e = q.degree
    x = Polynomial.X
    g = [x ** (e - j) * q[e - j] for j in range(e + 1)]
    return resultant(p, g)


def hadamard(a: CFiniteSeq, b: CFiniteSeq) -> CFiniteSeq:
    """Termwise product, returned with its minimal recurrence.

    Every root of the product sequence's minimal polynomial is a product of
    characteristic roots, with multiplicity bounded by the resultant's, so
    the product is annihilated by a recurrence of order at most
    D = deg(resultant).  Two linear recurrences that agree on
    ``L1 + L2`` terms agree forever, hence fitting 2D + 2 terms and checking
    ``a.order + b.order`` more is a certificate, not a heuristic.
    """
    bound = max(1, product_char_poly(a, b).degree)
    extra = a.order + b.order
    n = 2 * bound + 2 + extra
    prods = [x * y for x, y in zip(a.terms(n, rational=True), b.terms(n, rational=True))]
    found = find_recurrence(prods[: 2 * bound + 2], bound)
    if found.terms(n, rational=True) != prods:
        raise ArithmeticError("hadamard recurrence failed verification")
    return found


# -- recurrence discovery -----------------------------------------------------


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction], nvars: int) -> list[Fraction] | None:
    """One solution of an overdetermined linear system over Q, or None if inconsistent."""
    m = [row[:] + [r] for row, r in zip(rows, rhs)]
    pivots = []
    r = 0
    for c in range(nvars):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in m):
        return None
    sol = [Fraction(0)] * nvars
    for i, c in enumerate(pivots):
        sol[c] = m[i][-1]
    return sol


def find_recurrence(prefix: Sequence[Scalar], max_order: int) -> CFiniteSeq:
    """Minimal-order linear recurrence fitting the whole prefix.

    For each order d = 1..max_order, solves ``s_n = sum c_i s_{n-i}`` for
    every n in d..len-1 exactly.  Requires ``len(prefix) >= 2*max_order + 2``
    so that a fit is corroborated by at least two extra terms.
    """
    if max_order < 1:
        raise ValueError("max_order must be >= 1")
    if len(prefix) < 2 * max_order + 2:
        raise InsufficientData(
            f"need at least {2 * max_order + 2} terms for max_order {max_order}, got {len(prefix)}"
        )
    s = [Fraction(v) for v in prefix]
    if all(v == 0 for v in s):
        return CFiniteSeq.zero()
    for d in range(1, max_order + 1):
        rows = [[s[n - i] for i in range(1, d + 1)] for n in range(d, len(s))]
        sol = _solve_exact(rows, s[d:], d)
        if sol is not None:
            return CFiniteSeq(tuple(sol), tuple(prefix[:d]))
    raise NotFound(f"no recurrence of order <= {max_order} fits {len(prefix)} terms")


def stream_equivalent(gf: RationalGF, horizon: int) -> bool:
    seq = to_recurrence(gf)
    return expand(gf, horizon, rational=True) == seq.terms(horizon, rational=True)


def iter_gf(gf: RationalGF) -> Iterator[Scalar]:
    return GFStream(gf)

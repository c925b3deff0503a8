"""Exact integer/rational polynomials, normalized rational functions and resultants.

Python ints are already arbitrary precision and ``fractions.Fraction`` is an
exact rational, so neither is reimplemented here.  Polynomials are dense and
stored in ascending order of degree.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


def _canon(c: Scalar) -> Scalar:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    """Dense univariate polynomial, ``coeffs[i]`` multiplies ``x**i``.

    Coefficients are ints, or Fractions when produced by division over Q.
    Integral Fractions are folded back to ints so equality is structural.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_canon(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def const(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * n + [c])

    X: Polynomial  # set below

    # -- structure --------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int) -> Scalar:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_poly(self)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    # -- ring operations ---------------------------------------------------

    @staticmethod
    def _lift(other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        if isinstance(other, (list, tuple)):
            return Polynomial(other)
        return NotImplemented

    def __add__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self.coeffs])

    def __sub__(self, other) -> Polynomial:
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if isinstance(other, (int, Fraction)):
            return Polynomial([c * other for c in self.coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial()
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result, base = Polynomial([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        return poly_divmod(self, self._lift(other))

    def __floordiv__(self, other) -> Polynomial:
        return poly_divmod(self, self._lift(other))[0]

    def __mod__(self, other) -> Polynomial:
        return poly_divmod(self, self._lift(other))[1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, n: int) -> Polynomial:
        """Multiply by ``x**n`` (n >= 0) or drop the ``-n`` lowest coefficients."""
        if n >= 0:
            return Polynomial([0] * n + list(self.coeffs)) if self.coeffs else self
        return Polynomial(self.coeffs[-n:])

    def truncate(self, n: int) -> Polynomial:
        """Keep only terms of degree < n."""
        return Polynomial(self.coeffs[:n])

    def derivative(self) -> Polynomial:
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def reversed(self, degree: int | None = None) -> Polynomial:
        """``x**d * p(1/x)`` for ``d = degree`` (defaults to deg p)."""
        d = self.degree if degree is None else degree
        if d < self.degree:
            raise ValueError("reversal degree below polynomial degree")
        padded = list(self.coeffs) + [0] * (d + 1 - len(self.coeffs))
        return Polynomial(reversed(padded))

    # -- content ------------------------------------------------------------

    def content(self) -> Fraction:
        """Positive rational c with self / c integral and primitive (0 for zero)."""
        if not self.coeffs:
            return Fraction(0)
        den = lcm(*(Fraction(c).denominator for c in self.coeffs))
        nums = [int(c * den) for c in self.coeffs]
        return Fraction(abs(reduce(gcd, nums)), den)

    def primitive_part(self) -> Polynomial:
        """Integral primitive polynomial with positive leading coefficient."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.lc < 0:
            c = -c
        return Polynomial([_canon(Fraction(x) / c) for x in self.coeffs])


Polynomial.X = Polynomial([0, 1])


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division with remainder over Q: ``a = q*b + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    r = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lb = Fraction(b.lc)
    if len(r) <= db:
        return Polynomial(), a
    q = [Fraction(0)] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] / lb
        if c == 0:
            continue
        q[i - db] = c
        for j, bc in enumerate(b.coeffs):
            r[i - db + j] -= c * bc
    return Polynomial(q), Polynomial(r[:db])


def exact_quotient(a: Polynomial, b: Polynomial) -> Polynomial:
    q, r = poly_divmod(a, b)
    if not r.is_zero():
        raise ArithmeticError(f"{b!r} does not divide {a!r}")
    return q


def pseudo_remainder(a: Polynomial, b: Polynomial) -> Polynomial:
    """``lc(b)**e * a mod b`` for some e >= 0, computed without fractions.

    Only defined up to the power of lc(b), which is all gcd needs.
    """
    if b.is_zero():
        raise ZeroDivisionError("pseudo-remainder by zero")
    r = list(a.coeffs)
    db, lb = b.degree, b.lc
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [c * lb for c in r]
        for j, bc in enumerate(b.coeffs):
            r[shift + j] -= lr * bc
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return Polynomial(r)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Primitive gcd with positive leading coefficient (zero iff both are zero)."""
    a, b = a.primitive_part(), b.primitive_part()
    while not b.is_zero():
        a, b = b, pseudo_remainder(a, b).primitive_part()
    return a


def squarefree_part(p: Polynomial) -> Polynomial:
    if p.degree <= 0:
        return p.primitive_part()
    return exact_quotient(p, poly_gcd(p, p.derivative())).primitive_part()


# -- rational functions ----------------------------------------------------


class RationalGF:
    """A rational function ``num/den`` kept in canonical form.

    Canonical form: common factors removed, integer coefficients with no
    common content across num and den together, and ``den(0) > 0``.  The
    constant term must be nonzero so the function has a power series.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = Polynomial._lift(num)
        den = Polynomial._lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = poly_gcd(num, den)
        if not num.is_zero() and g.degree > 0:
            num, den = exact_quotient(num, g), exact_quotient(den, g)
        if num.is_zero():
            den = Polynomial([1])
        if den[0] == 0:
            raise ValueError(f"denominator {format_poly(den)} vanishes at 0; no power series")
        scale = lcm(*(Fraction(c).denominator for c in num.coeffs + den.coeffs))
        nums = [int(c * scale) for c in num.coeffs + den.coeffs]
        content = reduce(gcd, nums)
        if den[0] < 0:
            content = -content
        object.__setattr__(self, "num", Polynomial([int(c * scale) // content for c in num.coeffs]))
        object.__setattr__(self, "den", Polynomial([int(c * scale) // content for c in den.coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("RationalGF is immutable")

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalGF):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalGF({list(self.num.coeffs)!r}, {list(self.den.coeffs)!r})"

    def __str__(self) -> str:
        return format_gf(self)

    def __add__(self, other: RationalGF) -> RationalGF:
        return RationalGF(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other: RationalGF) -> RationalGF:
        return RationalGF(self.num * other.den - other.num * self.den, self.den * other.den)

    def __neg__(self) -> RationalGF:
        return RationalGF(-self.num, self.den)

    def scale(self, c: Scalar) -> RationalGF:
        return RationalGF(self.num * c, self.den)

    def __mul__(self, other) -> RationalGF:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return RationalGF(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def is_proper(self) -> bool:
        return self.num.degree < self.den.degree

    def oriented(self, lead_positive: bool = False) -> tuple[Polynomial, Polynomial]:
        """(num, den); with ``lead_positive=True`` the denominator's leading coefficient is positive."""
        if lead_positive and self.den.lc < 0:
            return -self.num, -self.den
        return self.num, self.den


# -- resultants ------------------------------------------------------------


def bareiss_det(matrix: Sequence[Sequence[Polynomial]]) -> Polynomial:
    """Fraction-free determinant over Z[x]; every division is exact."""
    m = [[Polynomial._lift(e) for e in row] for row in matrix]
    n = len(m)
    if n == 0:
        return Polynomial([1])
    sign = 1
    prev = Polynomial([1])
    for k in range(n - 1):
        if m[k][k].is_zero():
            for i in range(k + 1, n):
                if not m[i][k].is_zero():
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return Polynomial()
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = exact_quotient(m[i][j] * pivot - m[i][k] * m[k][j], prev)
            m[i][k] = Polynomial()
        prev = pivot
    return m[n - 1][n - 1] * sign


def _as_ycoeffs(f) -> list[Polynomial]:
    if isinstance(f, Polynomial):
        return [Polynomial([c]) for c in f.coeffs]
    cs = [Polynomial._lift(c) for c in f]
    while cs and cs[-1].is_zero():
        cs.pop()
    return cs


def sylvester_matrix(f, g) -> list[list[Polynomial]]:
    fc, gc = _as_ycoeffs(f), _as_ycoeffs(g)
    m, n = len(fc) - 1, len(gc) - 1
    size = m + n
    zero = Polynomial()
    rows = []
    for i in range(n):
        row = [zero] * size
        for j, c in enumerate(reversed(fc)):
            row[i + j] = c
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for j, c in enumerate(reversed(gc)):
            row[i + j] = c
        rows.append(row)
    return rows


def resultant(f, g) -> Polynomial:
    """Resultant with respect to y, eliminating y.

    ``f`` and ``g`` are polynomials in y given either as a univariate
    :class:`Polynomial` (integer coefficients) or as a sequence of
    coefficients in ascending powers of y, each an int or a Polynomial in x.
    The result is a Polynomial in x.
    """
    fc, gc = _as_ycoeffs(f), _as_ycoeffs(g)
    if not fc or not gc:
        raise ValueError("resultant of a zero polynomial")
    if len(fc) == 1 and len(gc) == 1:
        return Polynomial([1])
    return bareiss_det(sylvester_matrix(fc, gc))


# -- text format -------------------------------------------------------------


class PolyParseError(ValueError):
    pass


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Descending human-readable form, e.g. ``x^3-99x^2+99x-1``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if isinstance(a, Fraction):
            mag = f"({a})" if i else str(a)
        elif i and a == 1:
            mag = ""
        else:
            mag = str(a)
        mono = "" if i == 0 else var if i == 1 else f"{var}^{i}"
        parts.append((sign, mag + mono))
    s = "".join(sg + t for sg, t in parts)
    return s[1:] if s.startswith("+") else s


_TOKEN = re.compile(r"\s*(?:(\d+)|(x)|(\^)|(\+)|(-))")


def parse_poly(text: str) -> Polynomial:
    """Parse ``"3,164,1"`` (ascending) or ``"x^2+164x+3"``."""
    s = text.strip()
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        raise PolyParseError("empty polynomial")
    if "," in s or re.fullmatch(r"-?\d+", s):
        try:
            return Polynomial([int(t) for t in s.split(",")])
        except ValueError:
            raise PolyParseError(f"bad coefficient list {text!r}") from None

    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            if s[pos:].strip() == "":
                break
            raise PolyParseError(f"unexpected character {s[pos]!r} in {text!r}")
        pos = m.end()
        num, x, caret, plus, minus = m.groups()
        if num is not None:
            tokens.append(("int", int(num)))
        elif x:
            tokens.append(("x", None))
        elif caret:
            tokens.append(("^", None))
        else:
            tokens.append(("sign", 1 if plus else -1))

    coeffs: dict[int, int] = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        saw_sign = False
        while i < len(tokens) and tokens[i][0] == "sign":
            sign *= tokens[i][1]
            saw_sign = True
            i += 1
        if not saw_sign and not first:
            raise PolyParseError(f"missing operator in {text!r}")
        first = False
        coef = None
        if i < len(tokens) and tokens[i][0] == "int":
            coef = tokens[i][1]
            i += 1
        power = 0
        if i < len(tokens) and tokens[i][0] == "x":
            i += 1
            power = 1
            if i < len(tokens) and tokens[i][0] == "^":
                i += 1
                if i >= len(tokens) or tokens[i][0] != "int":
                    raise PolyParseError(f"exponent expected in {text!r}")
                power = tokens[i][1]
                i += 1
        elif coef is None:
            raise PolyParseError(f"term expected in {text!r}")
        coeffs[power] = coeffs.get(power, 0) + sign * (1 if coef is None else coef)
    if not coeffs:
        raise PolyParseError(f"no terms in {text!r}")
    out = [0] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return Polynomial(out)


def _split_top_level(text: str) -> list[str]:
    depth, parts, cur = 0, [], []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise PolyParseError(f"unbalanced parentheses in {text!r}")
        if ch == "/" and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise PolyParseError(f"unbalanced parentheses in {text!r}")
    parts.append("".join(cur))
    return parts


def parse_gf(text: str) -> RationalGF:
    """Parse ``"NUM/DEN"`` (or a bare polynomial) into canonical form."""
    parts = _split_top_level(text)
    if len(parts) > 2:
        raise PolyParseError(f"more than one '/' in {text!r}")
    num = parse_poly(parts[0])
    den = parse_poly(parts[1]) if len(parts) == 2 else Polynomial([1])
    try:
        return RationalGF(num, den)
    except (ValueError, ZeroDivisionError) as exc:
        raise PolyParseError(str(exc)) from None


def format_gf(gf: RationalGF, lead_positive: bool = False) -> str:
    num, den = gf.oriented(lead_positive)
    return f"({format_poly(num)})/({format_poly(den)})"

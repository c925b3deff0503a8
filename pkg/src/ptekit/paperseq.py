"""The concrete sequences: h_k, its Q(sqrt 6) closed forms, the eleven-sequence
degree-5 identity and Ramanujan's cubic identity, with verifiers."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, fields
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .cfinite import CFiniteSeq, GFStream, hadamard, linear_combination, shift, to_recurrence
from .exactalg import RationalGF, format_gf, parse_gf
from .pte import CHERNICK_FORMS, chernick

# -- Q(sqrt 6) -----------------------------------------------------------------


@dataclass(frozen=True)
class QuadElement:
    """a + b*sqrt(6) with rational a, b."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @staticmethod
    def _lift(x) -> QuadElement:
        return x if isinstance(x, QuadElement) else QuadElement(x)

    def __add__(self, other) -> QuadElement:
        o = self._lift(other)
        return QuadElement(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self) -> QuadElement:
        return QuadElement(-self.a, -self.b)

    def __sub__(self, other) -> QuadElement:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> QuadElement:
        return self._lift(other) - self

    def __mul__(self, other) -> QuadElement:
        o = self._lift(other)
        return QuadElement(self.a * o.a + 6 * self.b * o.b, self.a * o.b + o.a * self.b)

    __rmul__ = __mul__

    def conjugate(self) -> QuadElement:
        return QuadElement(self.a, -self.b)

    def norm(self) -> Fraction:
        return self.a * self.a - 6 * self.b * self.b

    def __truediv__(self, other) -> QuadElement:
        o = self._lift(other)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt 6)")
        p = self * o.conjugate()
        return QuadElement(p.a / n, p.b / n)

    def __pow__(self, k: int) -> QuadElement:
        if k < 0:
            return QuadElement(1) / (self ** (-k))
        result, base = QuadElement(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def to_int(self) -> int:
        if self.b != 0 or self.a.denominator != 1:
            raise ArithmeticError(f"{self} is not a rational integer")
        return self.a.numerator

    def __str__(self) -> str:
        return f"{self.a}+{self.b}*sqrt6"


ROOT6 = QuadElement(0, 1)
RHO = QuadElement(5, 2)  # 5 + 2 sqrt 6, root of x^2 - 10x + 1
RHO_BAR = QuadElement(5, -2)
RHO2 = QuadElement(49, 20)  # RHO ** 2
RHO2_BAR = QuadElement(49, -20)


# -- h_k -----------------------------------------------------------------------

_h_cache = [0, 1]


def h(k: int) -> int:
    """h_0 = 0, h_1 = 1, h_k = 10 h_{k-1} - h_{k-2}."""
    if k < 0:
        raise ValueError("k must be >= 0")
    cache = _h_cache
    while len(cache) <= k:
        cache.append(10 * cache[-1] - cache[-2])
    return cache[k]


H_GF = RationalGF([0, 1], [1, -10, 1])


def h_seq() -> CFiniteSeq:
    return to_recurrence(H_GF)


def closed_form_h(k: int) -> int:
    return ((RHO**k - RHO_BAR**k) / (4 * ROOT6)).to_int()


def closed_form_h_squared(k: int) -> int:
    return ((-2 + RHO2_BAR**k + RHO2**k) / 96).to_int()


def closed_form_h_next_h(k: int) -> int:
    return ((-10 + RHO_BAR * RHO2_BAR**k + RHO * RHO2**k) / 96).to_int()


def pell_invariant(k: int) -> int:
    m, n = h(k + 1), h(k)
    return m * m - 10 * m * n + n * n


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class Record:
    index: int
    label: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class Report:
    target: str
    records: tuple[Record, ...]

    @property
    def deviations(self) -> tuple[Record, ...]:
        return tuple(r for r in self.records if not r.ok)

    @property
    def ok(self) -> bool:
        return not self.deviations

    @property
    def checked(self) -> int:
        return len(self.records)


def _chunks(lo: int, hi: int, workers: int) -> list[tuple[int, int]]:
    n = hi - lo + 1
    if n <= 0:
        return []
    size = -(-n // max(1, workers))
    return [(s, min(hi, s + size - 1)) for s in range(lo, hi + 1, size)]


def _run(target: str, fn: Callable, lo: int, hi: int, args: tuple, workers: int) -> Report:
    if workers <= 1:
        return Report(target, tuple(fn(lo, hi, *args)))
    parts = _chunks(lo, hi, workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(fn, a, b, *args) for a, b in parts]
        records = [r for f in futures for r in f.result()]
    return Report(target, tuple(records))


# -- the eleven sequences ---------------------------------------------------------

THEOREM_LABELS = ("a", "b", "c", "d", "e", "f", "p", "q", "r", "s", "t")
LEFT_LABELS = THEOREM_LABELS[:6]
RIGHT_LABELS = THEOREM_LABELS[6:]

_DEN = "x^3-99x^2+99x-1"
THEOREM_GF_TEXT = {
    "a": f"(x^2+164x+3)/({_DEN})",
    "b": f"(-7x^2+134x+1)/({_DEN})",
    "c": f"(-x^2+298x-1)/({_DEN})",
    "d": f"(-5x^2+228x-7)/({_DEN})",
    "e": f"(3x^2+258x-5)/({_DEN})",
    "f": f"(-3x^2+94x-3)/({_DEN})",
    "p": f"(-5x^2+138x+3)/({_DEN})",
    "q": f"(3x^2+244x+1)/({_DEN})",
    "r": f"(x^2+254x-7)/({_DEN})",
    "s": f"(-7x^2+148x-5)/({_DEN})",
    "t": "3/(1-x)",
}

# Theorem label -> construction label (values shifted by +2u').  The
# construction's r is identically 1 and becomes the literal 1 on the right
# of the identity; its s, t, u become the theorem's r, s, t.
THEOREM_TO_CONSTRUCTION = {
    "a": "a", "b": "b", "c": "c", "d": "d", "e": "e", "f": "f",
    "p": "p", "q": "q", "r": "s", "s": "t", "t": "u",
}  # fmt: skip

_RAM_DEN = "1-82x-82x^2+x^3"
RAMANUJAN_GF_TEXT = {
    "a": f"(1+53x+9x^2)/({_RAM_DEN})",
    "b": f"(2-26x-12x^2)/({_RAM_DEN})",
    "c": f"(2+8x-10x^2)/({_RAM_DEN})",
}


def theorem_gfs() -> dict[str, RationalGF]:
    return {k: parse_gf(v) for k, v in THEOREM_GF_TEXT.items()}


def ramanujan_gfs() -> dict[str, RationalGF]:
    return {k: parse_gf(v) for k, v in RAMANUJAN_GF_TEXT.items()}


@dataclass(frozen=True)
class TheoremSequences:
    a: CFiniteSeq
    b: CFiniteSeq
    c: CFiniteSeq
    d: CFiniteSeq
    e: CFiniteSeq
    f: CFiniteSeq
    p: CFiniteSeq
    q: CFiniteSeq
    r: CFiniteSeq
    s: CFiniteSeq
    t: CFiniteSeq

    def items(self) -> list[tuple[str, CFiniteSeq]]:
        return [(fl.name, getattr(self, fl.name)) for fl in fields(self)]

    def rows(self, k_max: int) -> list[tuple[int, ...]]:
        """Tuples (a_k, .., t_k) for k = 0..k_max."""
        cols = [seq.terms(k_max + 1) for _, seq in self.items()]
        return list(zip(*cols))

    def tuple_at(self, k: int) -> tuple[int, ...]:
        return self.rows(k)[k]


def theorem_sequences_via_gf() -> TheoremSequences:
    return TheoremSequences(**{k: to_recurrence(g) for k, g in theorem_gfs().items()})


def _h_products() -> tuple[CFiniteSeq, CFiniteSeq, CFiniteSeq]:
    """(h_{k+1}^2, h_{k+1} h_k, h_k^2) as sequences in k."""
    hs = h_seq()
    h1 = shift(hs, 1)
    return hadamard(h1, h1), hadamard(h1, hs), hadamard(hs, hs)


def theorem_sequences_via_chernick() -> TheoremSequences:
    """Substitute m = h_{k+1}, n = h_k into each quadratic form, add 2u', relabel.

    Built with sequence algebra, so each handle carries the generating
    function implied by the construction rather than the stated one.
    """
    mm, mn, nn = _h_products()
    ux, uy, uz = CHERNICK_FORMS["u"]
    out = {}
    for label, src in THEOREM_TO_CONSTRUCTION.items():
        x, y, z = CHERNICK_FORMS[src]
        out[label] = linear_combination([(x + 2 * ux, mm), (y + 2 * uy, mn), (z + 2 * uz, nn)])
    return TheoremSequences(**out)


def construction_values(k: int) -> dict[str, int]:
    """All twelve shifted construction values a_k'+2u_k', .., u_k'+2u_k' at index k."""
    t = chernick(h(k + 1), h(k))
    return {label: v + 2 * t.u for label, v in zip("abcdefpqrstu", t.values())}


def theorem_tuple_via_chernick(k: int) -> tuple[int, ...]:
    vals = construction_values(k)
    return tuple(vals[THEOREM_TO_CONSTRUCTION[label]] for label in THEOREM_LABELS)


def identity_lhs(row: Sequence[int], j: int) -> int:
    return sum(v**j for v in row[:6]) - sum(v**j for v in row[6:])


def _theorem_records(lo: int, hi: int, powers: tuple[int, ...]) -> list[Record]:
    streams = [GFStream(g) for g in theorem_gfs().values()]
    out = []
    for k in range(hi + 1):
        row = [next(s) for s in streams]
        if k < lo:
            continue
        for j in powers:
            out.append(Record(k, f"j={j}", 1, identity_lhs(row, j)))
    return out


def verify_theorem(k_max: int, j_set: Iterable[int] = (1, 2, 3, 4, 5), k_min: int = 0, workers: int = 1) -> Report:
    if k_min < 0 or k_max < 0:
        raise ValueError("range bounds must be nonnegative")
    powers = tuple(sorted(set(j_set)))
    if any(j < 1 for j in powers):
        raise ValueError("powers must be >= 1")
    return _run("theorem", _theorem_records, k_min, k_max, (powers,), workers)


def _ramanujan_records(lo: int, hi: int) -> list[Record]:
    streams = [GFStream(g) for g in ramanujan_gfs().values()]
    out = []
    for n in range(hi + 1):
        a, b, c = (next(s) for s in streams)
        if n >= lo:
            out.append(Record(n, "a^3+b^3-c^3", (-1) ** n, a**3 + b**3 - c**3))
    return out


def verify_ramanujan(n_max: int, n_min: int = 0, workers: int = 1) -> Report:
    if n_min < 0 or n_max < 0:
        raise ValueError("range bounds must be nonnegative")
    return _run("ramanujan", _ramanujan_records, n_min, n_max, (), workers)


def _closed_form_records(lo: int, hi: int) -> list[Record]:
    out = []
    for k in range(lo, hi + 1):
        hk, hk1 = h(k), h(k + 1)
        out.append(Record(k, "h", hk, closed_form_h(k)))
        out.append(Record(k, "h^2", hk * hk, closed_form_h_squared(k)))
        out.append(Record(k, "h_{k+1}h_k", hk1 * hk, closed_form_h_next_h(k)))
    return out


def verify_closed_forms(k_max: int, k_min: int = 0, workers: int = 1) -> Report:
    if k_min < 0 or k_max < 0:
        raise ValueError("range bounds must be nonnegative")
    return _run("closed-forms", _closed_form_records, k_min, k_max, (), workers)


def _pell_records(lo: int, hi: int) -> list[Record]:
    return [Record(k, "pell", 1, pell_invariant(k)) for k in range(lo, hi + 1)]


def verify_pell(k_max: int, k_min: int = 0, workers: int = 1) -> Report:
    if k_min < 0 or k_max < 0:
        raise ValueError("range bounds must be nonnegative")
    return _run("pell", _pell_records, k_min, k_max, (), workers)


_STATED_H = {
    "H1": "(-x^2-x)/(x^3-99x^2+99x-1)",
    "H2": "(-10x)/(x^3-99x^2+99x-1)",
    "H3": "(-x-1)/(x^3-99x^2+99x-1)",
}


def derive_H_forms() -> Report:
    """Rebuild H1, H2, H3 by Hadamard products and shifts, then reassemble
    the a-generating function as -5 H3 + 4 H2 - 3 H1 + 2/(1-x)."""
    hs = h_seq()
    H1 = hadamard(hs, hs)
    H2 = hadamard(shift(hs, 1), hs)
    H3 = shift(H1, 1)
    one = CFiniteSeq.constant(1)
    assembled = linear_combination([(-5, H3), (4, H2), (-3, H1), (2, one)])

    def rec(i, label, expected: RationalGF, got: RationalGF) -> Record:
        return Record(i, label, format_gf(expected, lead_positive=True), format_gf(got, lead_positive=True))

    records = [
        rec(0, "H1", parse_gf(_STATED_H["H1"]), H1.gf),
        rec(1, "H2", parse_gf(_STATED_H["H2"]), H2.gf),
        rec(2, "H3", parse_gf(_STATED_H["H3"]), H3.gf),
        rec(3, "-5H3+4H2-3H1+2/(1-x)", parse_gf(THEOREM_GF_TEXT["a"]), assembled.gf),
    ]
    via = theorem_sequences_via_chernick()
    stated = theorem_gfs()
    for i, (label, seq) in enumerate(via.items(), start=4):
        records.append(rec(i, f"gf[{label}]", stated[label], seq.gf))
    return Report("h-forms", tuple(records))

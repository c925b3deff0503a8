from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import berlekamp_massey, series_by_inverse
from ptekit.cfinite import (
    CFiniteSeq,
    GFStream,
    InsufficientData,
    NonIntegralSeries,
    NotFound,
    combine,
    expand,
    find_recurrence,
    from_recurrence,
    hadamard,
    linear_combination,
    product_char_poly,
    shift,
    to_recurrence,
)
from ptekit.exactalg import Polynomial, RationalGF, parse_gf
from ptekit.paperseq import RAMANUJAN_GF_TEXT, THEOREM_GF_TEXT

STATED_GFS = [parse_gf(t) for t in THEOREM_GF_TEXT.values()] + [parse_gf(t) for t in RAMANUJAN_GF_TEXT.values()]
A_GF = parse_gf(THEOREM_GF_TEXT["a"])
H = to_recurrence(parse_gf("x/(1-10x+x^2)"))
THREE = CFiniteSeq.constant(3)
# h_0..h_7, iterating h_k = 10 h_{k-1} - h_{k-2} by hand
H_TERMS = [0, 1, 10, 99, 980, 9701, 96030, 950599]


def test_expand_examples():
    assert expand(A_GF, 2) == [-3, -461]
    assert expand(parse_gf("3/(1-x)"), 4) == [3, 3, 3, 3]
    assert expand(parse_gf("(1+53x+9x^2)/(1-82x-82x^2+x^3)"), 2) == [1, 135]
    assert 135**3 + 138**3 - 172**3 == -1


@pytest.mark.parametrize("gf", STATED_GFS, ids=list(THEOREM_GF_TEXT) + ["ra", "rb", "rc"])
def test_expand_matches_series_inverse(gf):
    assert expand(gf, 40) == series_by_inverse(gf.num.coeffs, gf.den.coeffs, 40)


def test_non_integral_series():
    with pytest.raises(NonIntegralSeries) as exc:
        expand(parse_gf("1/(2-x)"), 2)
    assert exc.value.index == 0
    assert expand(parse_gf("1/(2-x)"), 3, rational=True) == [Fraction(1, 2), Fraction(1, 4), Fraction(1, 8)]
    # integral for a while, then not
    with pytest.raises(NonIntegralSeries) as exc:
        expand(RationalGF([2, 0, 1], [2]), 3)
    assert exc.value.index == 2


def test_to_recurrence_examples():
    s = to_recurrence(A_GF)
    assert s.rec == (99, -99, 1)
    # third term: -1 + 99*(-461) - 99*(-3) = -45343
    assert s.init == (-3, -461, -45343)
    t = to_recurrence(parse_gf("3/(1-x)"))
    assert (t.rec, t.init) == ((1,), (3,))
    assert (H.rec, H.init) == ((10, -1), (0, 1))


def test_from_recurrence_examples():
    assert from_recurrence(CFiniteSeq((10, -1), (0, 1))) == parse_gf("x/(1-10x+x^2)")
    assert from_recurrence(CFiniteSeq((1,), (3,))) == parse_gf("3/(1-x)")
    assert from_recurrence(CFiniteSeq((99, -99, 1), (-3, -461, -45343))) == A_GF


@pytest.mark.parametrize("gf", STATED_GFS)
def test_round_trip_and_stream_equivalence(gf):
    seq = to_recurrence(gf)
    assert from_recurrence(seq) == gf
    assert expand(gf, 100) == seq.terms(100)


def test_improper_gf_pads_recurrence():
    gf = RationalGF([1, 2, 3, 4], [1, -1])
    seq = to_recurrence(gf)
    assert seq.order == 4 and seq.rec[1:] == (0, 0, 0)
    assert seq.terms(8) == [1, 3, 6, 10, 10, 10, 10, 10]
    assert from_recurrence(seq) == gf


def test_streams_are_resumable_copies():
    s = GFStream(A_GF)
    first = [next(s) for _ in range(5)]
    t = s.copy()
    assert [next(s) for _ in range(3)] == [next(t) for _ in range(3)]
    assert first == expand(A_GF, 5)
    assert next(s) == expand(A_GF, 9)[8]
    r = to_recurrence(A_GF).stream()
    for _ in range(50):
        next(r)
    assert len(r._window) == 3


def test_combine_and_shift():
    hh = hadamard(H, H)
    z = combine(hh, hh, 1, -1)
    assert z.terms(20) == [0] * 20
    assert z.gf == RationalGF(0)
    H3 = shift(hh, 1)
    assert H3.gf == parse_gf("(-x-1)/(x^3-99x^2+99x-1)")
    H2 = hadamard(shift(H, 1), H)
    one = CFiniteSeq.constant(1)
    left = combine(H3, H2, -5, 4)
    right = combine(hh, one, -3, 2)
    assert combine(left, right).gf == A_GF
    assert linear_combination([(-5, H3), (4, H2), (-3, hh), (2, one)]).gf == A_GF


@given(st.integers(0, 30), st.sampled_from(STATED_GFS[:4]))
@settings(max_examples=30, deadline=None)
def test_shift_drops_terms(t, gf):
    seq = to_recurrence(gf)
    assert shift(seq, t).terms(20) == seq.terms(t + 20)[t:]


@given(st.integers(-5, 5), st.integers(-5, 5))
@settings(max_examples=30, deadline=None)
def test_combine_termwise(alpha, beta):
    a, b = to_recurrence(STATED_GFS[0]), to_recurrence(STATED_GFS[12])
    c = combine(a, b, alpha, beta)
    assert c.terms(30) == [alpha * x + beta * y for x, y in zip(a.terms(30), b.terms(30))]


def test_hadamard_examples():
    assert hadamard(H, H).gf == parse_gf("(-x^2-x)/(x^3-99x^2+99x-1)")
    assert hadamard(H, H).gf == RationalGF([0, 1, 1], [1, -99, 99, -1])
    assert hadamard(shift(H, 1), H).gf == parse_gf("(-10x)/(x^3-99x^2+99x-1)")
    nine = hadamard(THREE, THREE)
    assert nine.gf == parse_gf("9/(1-x)")


@pytest.mark.parametrize("i", range(3))
@pytest.mark.parametrize("j", range(3))
def test_hadamard_termwise_50(i, j):
    seqs = [H, shift(H, 1), THREE]
    a, b = seqs[i], seqs[j]
    prod = hadamard(a, b)
    assert prod.terms(50) == [x * y for x, y in zip(a.terms(50), b.terms(50))]
    # the minimal polynomial divides the resultant-built one
    rem = product_char_poly(a, b) % prod.char_poly()
    assert rem.is_zero()


def test_hadamard_with_repeated_roots():
    # k * 2^k has a double root; its square needs order 3
    a = CFiniteSeq((4, -4), (0, 2))
    sq = hadamard(a, a)
    assert sq.terms(20) == [(k * 2**k) ** 2 for k in range(20)]
    assert sq.order == 3


def test_find_recurrence_examples():
    h = find_recurrence(H_TERMS, 3)
    assert (h.order, h.rec) == (2, (10, -1))
    a = find_recurrence(expand(A_GF, 10), 3)
    assert (a.order, a.rec) == (3, (99, -99, 1))
    with pytest.raises(NotFound):
        find_recurrence([1, 2, 4, 8, 1], 1)
    with pytest.raises(InsufficientData):
        find_recurrence([1, 2, 4], 1)


def test_find_recurrence_rejects_mistyped_h_prefix():
    # a single wrong digit in h_7 breaks the order-2 fit
    bad = H_TERMS[:7] + [950699]
    with pytest.raises(NotFound):
        find_recurrence(bad, 3)


def test_find_recurrence_zero_and_rational():
    assert find_recurrence([0] * 6, 2) == CFiniteSeq.zero()
    s = find_recurrence([16, 8, 4, 2, 1], 1)
    assert s.rec == (Fraction(1, 2),)
    with pytest.raises(NotFound):
        find_recurrence([16, 8, 4, 2, 1, 0], 2)


seq_strategy = st.builds(
    lambda rec, init: CFiniteSeq(tuple(rec), tuple(init[: len(rec)])),
    st.lists(st.integers(-4, 4), min_size=1, max_size=3),
    st.lists(st.integers(-4, 4), min_size=3, max_size=3),
)


@given(seq_strategy)
@settings(max_examples=80, deadline=None)
def test_find_recurrence_agrees_with_berlekamp_massey(seq):
    terms = seq.terms(10)
    found = find_recurrence(terms, 4)
    L, _ = berlekamp_massey(terms)
    assert found.order == max(L, 1)
    assert found.terms(10) == terms


@given(seq_strategy)
@settings(max_examples=40, deadline=None)
def test_find_recurrence_of_expand_reexpands(seq):
    terms = expand(seq.gf, 12)
    found = find_recurrence(terms, 5)
    assert expand(found.gf, 12) == terms


def test_char_poly_clears_denominators():
    s = CFiniteSeq((Fraction(1, 2),), (4,))
    assert s.char_poly() == Polynomial([-1, 2])
    assert s.terms(3, rational=True) == [4, 2, 1]
    with pytest.raises(NonIntegralSeries):
        s.terms(4)


def test_recurrence_text():
    assert H.recurrence_text() == "s_n = 10 s_{n-1} - s_{n-2}"
    assert to_recurrence(A_GF).recurrence_text() == "s_n = 99 s_{n-1} - 99 s_{n-2} + s_{n-3}"
    assert CFiniteSeq.zero().recurrence_text() == "s_n = 0"

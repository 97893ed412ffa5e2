"""Dyadic/interval substrate: the containment contract is everything."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qcert.intervals import (
    DomainError,
    Dyadic,
    Interval,
    get_precision,
    workprec,
)

rationals = st.fractions(
    min_value=Fraction(-1000), max_value=Fraction(1000), max_denominator=10**6
)


def iv(fr, prec=192):
    return Interval.from_fraction(Fraction(fr), prec)


class TestDyadic:
    def test_canonical_form(self):
        d = Dyadic(12, 3)  # 12*8 = 96 = 3*2^5
        assert (d.man, d.exp) == (3, 5)
        assert (Dyadic(0, 17).man, Dyadic(0, 17).exp) == (0, 0)

    def test_round_trip_fraction(self):
        d = Dyadic(-7, -4)
        assert d.to_fraction() == Fraction(-7, 16)

    @given(st.integers(-10**18, 10**18), st.integers(-80, 80))
    def test_directed_rounding_brackets(self, man, exp):
        d = Dyadic(man, exp)
        lo = d.round(24, up=False)
        hi = d.round(24, up=True)
        assert lo.to_fraction() <= d.to_fraction() <= hi.to_fraction()
        assert lo.man.bit_length() <= 24 and hi.man.bit_length() <= 25

    def test_exact_add_mul(self):
        a, b = Dyadic(3, -2), Dyadic(5, -4)
        assert (a + b).to_fraction() == Fraction(3, 4) + Fraction(5, 16)
        assert (a * b).to_fraction() == Fraction(15, 64)

    def test_comparisons(self):
        assert Dyadic(1, -1) < Dyadic(1)
        assert Dyadic(-3, 5) < Dyadic(1, -10)
        assert Dyadic(0) < Dyadic(1, -100)
        assert Dyadic(5, 2) == Dyadic(20, 0)

    def test_cmp_fraction(self):
        assert Dyadic(1, -2).cmp_fraction(Fraction(1, 4)) == 0
        assert Dyadic(1, -2).cmp_fraction(Fraction(1, 3)) < 0
        assert Dyadic(-1, -2).cmp_fraction(-1) > 0

    @given(st.integers(-10**12, 10**12), st.integers(-40, 40), st.integers(2, 30))
    def test_decimal_directed(self, man, exp, digits):
        d = Dyadic(man, exp)
        if d.is_zero:
            assert d.decimal(digits) == "0"
            return
        lo = Fraction(d.decimal(digits, up=False))
        hi = Fraction(d.decimal(digits, up=True))
        assert lo <= d.to_fraction() <= hi


class TestIntervalArithmetic:
    def test_trivial_examples(self):
        a = Interval(Dyadic(1), Dyadic(2))
        b = Interval(Dyadic(3), Dyadic(4))
        s = a.add(b, 192)
        assert s.lo == Dyadic(4) and s.hi == Dyadic(6)
        m = Interval(Dyadic(-1), Dyadic(1)).mul(Interval(Dyadic(-1), Dyadic(1)), 192)
        assert m.contains(-1) and m.contains(1)

    def test_third_width(self):
        q = Interval.point(1).div(Interval.point(3), 53)
        assert q.contains(Fraction(1, 3))
        assert q.width.to_fraction() <= Fraction(1, 2**50)

    def test_div_by_zero_interval(self):
        with pytest.raises(DomainError):
            Interval.point(1).div(Interval(Dyadic(-1), Dyadic(1)), 64)

    def test_pow_straddle_even(self):
        p = Interval(Dyadic(-2), Dyadic(3)).pow_int(2, 192)
        assert p.lo.sign == 0 and p.contains(9) and p.contains(0)
        assert Interval(Dyadic(-2), Dyadic(3)).pow_int(3, 192).contains(-8)

    def test_pow_negative(self):
        p = Interval.point(2).pow_int(-3, 192)
        assert p.contains(Fraction(1, 8))

    def test_sqrt_exact_square(self):
        s = Interval.point(4).sqrt(192)
        assert s.contains(2) and s.width.to_fraction() == 0

    def test_sqrt_domain(self):
        with pytest.raises(DomainError):
            Interval(Dyadic(-1), Dyadic(1)).sqrt(64)

    def test_operator_precision_context(self):
        with workprec(64):
            assert get_precision() == 64
            w64 = (iv(Fraction(1, 3), 80) * iv(Fraction(1, 7), 80)).width
        with workprec(256):
            w256 = (iv(Fraction(1, 3), 300) * iv(Fraction(1, 7), 300)).width
        assert w256.to_fraction() < w64.to_fraction()

    def test_containment_randomized(self):
        # 1000 random rational pairs: the exact result is inside, for
        # every operation at several precisions
        rng = random.Random(20240817)
        for _ in range(1000):
            a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
            b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
            prec = rng.choice((24, 53, 192))
            ia, ib = iv(a, prec), iv(b, prec)
            assert ia.add(ib, prec).contains(a + b)
            assert ia.sub(ib, prec).contains(a - b)
            assert ia.mul(ib, prec).contains(a * b)
            if b != 0 and not ib.contains(0):
                assert ia.div(ib, prec).contains(a / b)
            assert ia.pow_int(3, prec).contains(a**3)

    def test_monotone_refinement(self):
        # widening precision never widens any enclosure
        rng = random.Random(99)
        for _ in range(200):
            a = Fraction(rng.randint(-10**9, 10**9), rng.randint(1, 10**6))
            b = Fraction(rng.randint(1, 10**9), rng.randint(1, 10**6))
            lo_p = iv(a, 64).mul(iv(b, 64), 64)
            hi_p = iv(a, 256).mul(iv(b, 256), 256)
            assert lo_p.contains_interval(hi_p)

    @given(rationals, rationals)
    def test_hull_and_contains(self, a, b):
        h = Interval.hull(iv(a), iv(b))
        assert h.contains(a) and h.contains(b)

"""The certification engine: exact functionals, positivity certificates,
crossover search, and agreement between the certified and exact regimes.
"""

import random
from fractions import Fraction

import pytest

from qcert.bounds import bound_value
from qcert.certify import (
    INEQUALITIES,
    THEOREMS,
    IneqPoly,
    build_ineq,
    certify_inequality,
    certify_positive,
    exact_verify,
    find_crossover,
    invariant_a,
    invariant_b,
    invariant_i,
    laguerre,
    sharpness_scan,
    theorem_predicate,
    verify_theorem,
)
from qcert.certify import HybridPoly
from qcert.intervals import Dyadic, Interval
from qcert.ring import RingElem

F = Fraction

# Frozen from exact scans (statement coordinates): the largest index
# below each stated threshold where the statement fails.
SHARPNESS_WITNESSES = {
    "A": 229,
    "A-companion": 278,
    "B": 271,
    "B-companion": 308,
    "double-turan": 272,
    "double-turan-companion": 345,
    "laguerre3": 650,
    "laguerre3-companion": 714,
}

# Frozen: degree of the first symbolically nonzero coefficient of each
# expanded inequality polynomial.
LEADING_DEGREES = {
    "ineq1": 6, "ineq2": 7, "ineq3": 9, "ineq4": 10,
    "ineq5": 9, "ineq6": 10, "ineq-L3": 9, "ineq-c-L3": 10,
}


class TestInvariants:
    def test_unit_tuples(self):
        assert invariant_a(1, 1, 1, 1, 1) == 0
        assert invariant_b(1, 1, 1, 1, 1) == 0
        assert invariant_i(1, 1, 1, 1, 1) == 0

    def test_positive_at_thresholds(self, table20k):
        assert invariant_a(*table20k.window(229, 5)) > 0
        assert invariant_b(*table20k.window(271, 5)) > 0

    def test_violation_below(self, table20k):
        assert invariant_a(*table20k.window(228, 5)) <= 0
        assert invariant_b(*table20k.window(270, 5)) <= 0


class TestLaguerre:
    def test_order_zero(self, table2k):
        assert laguerre(0, table2k, 17) == F(table2k[17] ** 2, 2)

    def test_order_one_is_log_concavity_gap(self, table2k):
        q = table2k.values
        for n in range(0, 500):
            assert laguerre(1, table2k, n) == q[n + 1] ** 2 - q[n] * q[n + 2], n

    def test_order_two_equals_invariant(self, table2k):
        for n in range(0, 1001):
            assert laguerre(2, table2k, n) == invariant_a(*table2k.window(n, 5)), n

    def test_order_three_quadratic_form(self, table2k):
        q = table2k.values
        for n in range(0, 1001):
            expected = (
                10 * q[n + 3] ** 2
                + 6 * q[n + 1] * q[n + 5]
                - 15 * q[n + 2] * q[n + 4]
                - q[n] * q[n + 6]
            )
            assert laguerre(3, table2k, n) == expected, n

    def test_index_overflow(self, table2k):
        with pytest.raises(IndexError):
            laguerre(3, table2k, 1996)


def _toy_ineq(monomials: dict[int, RingElem], x0: Fraction, prec: int = 192) -> IneqPoly:
    poly = HybridPoly.from_ring_monomials(monomials, prec)
    x0_d = Dyadic.from_fraction(x0, prec, up=True)
    return IneqPoly(
        ineq_id="toy", theorem_id="toy", N=len(monomials), prec=prec,
        poly=poly, x0=x0_d, window=1,
    )


class TestCertifyPositive:
    def test_x_squared(self):
        ineq = _toy_ineq({2: RingElem.from_rational(1)}, F(1))
        cert = certify_positive(ineq, ineq.x0)
        assert cert.proved and cert.leading_zero_degree == 2

    def test_sign_change_detected(self):
        # x - x^2 is negative on (1, 2]
        ineq = _toy_ineq(
            {1: RingElem.from_rational(1), 2: RingElem.from_rational(-1)}, F(2)
        )
        cert = certify_positive(ineq, ineq.x0)
        assert not cert.proved
        assert cert.negative_witness is not None

    def test_positive_on_smaller_radius(self):
        # the same polynomial is certifiable on (0, 1/2]
        ineq = _toy_ineq(
            {1: RingElem.from_rational(1), 2: RingElem.from_rational(-1)}, F(1, 2)
        )
        cert = certify_positive(ineq, ineq.x0)
        assert cert.proved

    def test_identically_zero(self):
        ineq = _toy_ineq({3: RingElem()}, F(1))
        cert = certify_positive(ineq, ineq.x0)
        assert not cert.proved and "identically zero" in cert.reason

    def test_negative_constant(self):
        ineq = _toy_ineq({0: RingElem.from_rational(-2)}, F(1))
        cert = certify_positive(ineq, ineq.x0)
        assert not cert.proved

    def test_tight_ring_cancellation(self):
        # (pi sqrt3)(pi^-1 sqrt3) - 3 + x^2: symbolic zero at degree 0
        c0 = RingElem({(1, 1): F(1)}) * RingElem({(-1, 1): F(1)}) + RingElem.from_rational(-3)
        ineq = _toy_ineq({0: c0, 2: RingElem.from_rational(1)}, F(1))
        cert = certify_positive(ineq, ineq.x0)
        assert cert.proved and cert.leading_zero_degree == 2


class TestIneqBuild:
    @pytest.mark.parametrize("ineq_id", sorted(INEQUALITIES))
    def test_leading_structure(self, ineq_id):
        ineq = build_ineq(ineq_id)
        d = LEADING_DEGREES[ineq_id]
        for k in range(d):
            assert ineq.poly.ring_parts[k].is_zero, (ineq_id, k)
            assert k not in ineq.poly.errs
        lead = ineq.poly.ring_parts[d]
        assert not lead.is_zero
        assert lead.eval_iv(192).is_positive, ineq_id

    def test_known_leading_coefficients(self):
        # the invariant-A cancellation leaves exactly pi^2/8 at degree 6
        assert build_ineq("ineq1").poly.ring_parts[6].terms == {(2, 0): F(1, 8)}
        # the double-Turan cancellation leaves pi^3 sqrt3/288 at degree 9
        assert build_ineq("ineq5").poly.ring_parts[9].terms == {(3, 1): F(1, 288)}

    def test_error_boxes_start_high(self):
        ineq = build_ineq("ineq1")
        assert min(ineq.poly.errs) == 15  # N+1 for N=14

    def test_degree_bound(self):
        # triple products of degree-(N+1) envelopes
        ineq = build_ineq("ineq3")
        assert ineq.poly.degree <= 3 * 25

    def test_window(self):
        assert build_ineq("ineq1").window == 5019
        assert build_ineq("ineq-L3").window == 18502


class TestCrossovers:
    def test_window_certified_ids(self):
        # six of the eight certify at the envelope validity window
        for ineq_id, window in [
            ("ineq1", 5019), ("ineq5", 5019),
            ("ineq3", 18502), ("ineq4", 18502),
            ("ineq-L3", 18502), ("ineq-c-L3", 18502),
        ]:
            n_star, cert = find_crossover(INEQUALITIES[ineq_id])
            assert cert.proved and n_star == window, ineq_id

    def test_companion_crossovers(self):
        # the companion polynomials are genuinely negative at the window;
        # the search must land between the true crossover and the seam
        n2, cert2 = find_crossover("A-companion")
        assert cert2.proved and 5845 <= n2 <= THEOREMS["A-companion"].seam
        n6, cert6 = find_crossover("double-turan-companion")
        assert cert6.proved and 6929 <= n6 <= THEOREMS["double-turan-companion"].seam

    def test_companion_not_certifiable_at_window(self):
        cert = certify_inequality("ineq2", max_prec=384)
        assert not cert.proved

    def test_soundness_random_points(self):
        # proved certificate: reduced polynomial positive at random x
        rng = random.Random(44)
        n_star, cert = find_crossover("A")
        ineq = build_ineq("ineq1")
        for _ in range(100):
            fx = F(rng.randint(1, 10**6), 10**6) * cert.x_star.to_fraction()
            x = Interval.from_fraction(fx, 192)
            acc = Interval.point(0)
            for c in reversed(cert.reduced_coeffs):
                acc = acc.mul(x, 192).add(c, 192)
            assert acc.is_positive


class TestExactRegime:
    def test_exact_verify_clean_stretch(self, table20k):
        assert exact_verify("A", table20k, 229, 1200) == []
        assert exact_verify("laguerre3", table20k, 651, 1200) == []

    def test_exact_verify_finds_known_violation(self, table20k):
        # the companion double-Turan statement fails exactly at 348
        assert exact_verify("double-turan-companion", table20k, 344, 400) == [348]

    def test_sharpness_witnesses(self, table20k):
        for tid, witness in SHARPNESS_WITNESSES.items():
            below = sharpness_scan(tid, table20k)
            assert below, tid
            assert max(below) == witness, tid

    def test_agreement_of_regimes(self, table20k):
        # certified regime never contradicts exact arithmetic
        rng = random.Random(99)
        for tid in THEOREMS:
            n_star, cert = find_crossover(tid)
            assert cert.proved
            spec = THEOREMS[tid]
            for _ in range(50):
                n = rng.randint(n_star + spec.shift, 20000 - 6)
                assert theorem_predicate(tid, table20k, n), (tid, n)


def _ineq_sign_via_bounds(theorem_id: str, n: int) -> int:
    """Evaluate the inequality combination through bound_value (with
    prefactors); returns a certified sign or 0 if undecided."""
    spec = THEOREMS[theorem_id]
    N = spec.N
    L = {s: bound_value(n, s, N, -1) for s in spec.shifts}
    U = {s: bound_value(n, s, N, +1) for s in spec.shifts}
    from qcert.enclosures import enclose_pi
    from qcert.intervals import workprec

    with workprec(192):
        pi = enclose_pi()
        sqrt3 = Interval.point(3).sqrt()
        x = Interval.point(1) / Interval.point(n).sqrt()
        if theorem_id == "A":
            value = L[0] * L[4] + 3 * L[2] * L[2] - 4 * U[1] * U[3]
        elif theorem_id == "A-companion":
            factor = 1 + pi.pow_int(2) * x.pow_int(6) / 32 - x.pow_int(7)
            value = 4 * factor * L[1] * L[3] - U[0] * U[4] - 3 * U[2] * U[2]
        elif theorem_id == "double-turan":
            value = (L[2] * L[2] - U[1] * U[3]).pow_int(2) - (
                U[1] * U[1] - L[0] * L[2]
            ) * (U[3] * U[3] - L[2] * L[4])
        elif theorem_id == "laguerre3":
            value = 10 * L[3] * L[3] + 6 * L[1] * L[5] - 15 * U[2] * U[4] - U[0] * U[6]
        else:
            raise NotImplementedError(theorem_id)
    if value.is_positive:
        return 1
    if value.is_negative:
        return -1
    return 0


class TestHomogeneity:
    @pytest.mark.parametrize("tid", ["A", "double-turan", "laguerre3", "A-companion"])
    def test_prefactor_cancellation(self, tid):
        # the prefactor-inclusive route and the prefactor-free expanded
        # polynomial must agree in sign wherever both are decided
        spec = THEOREMS[tid]
        ineq = build_ineq(spec.ineq_id)
        rng = random.Random(tid)
        checked = 0
        for _ in range(20):
            n = rng.randint(ineq.window, 20000)
            via_bounds = _ineq_sign_via_bounds(tid, n)
            from qcert.bounds import x_of

            poly_iv = ineq.eval_iv(x_of(n, 192))
            via_poly = 1 if poly_iv.is_positive else (-1 if poly_iv.is_negative else 0)
            if via_bounds and via_poly:
                assert via_bounds == via_poly, (tid, n)
                checked += 1
        assert checked >= 10, tid


class TestVerifyTheorem:
    def test_pass_with_report_fields(self, table20k):
        rep = verify_theorem("A", table20k)
        assert rep.status == "pass"
        assert rep.n_star == 5019
        assert rep.exact_range == (229, 5018)
        assert rep.exact_violations == []
        assert rep.sharpness_witness == 229
        assert rep.certificate.proved
        d = rep.to_json_dict(include_timing=False)
        assert "seconds" not in d and d["theorem"] == "A"

    def test_companion_double_turan_finds_erratum(self, table20k):
        rep = verify_theorem("double-turan-companion", table20k)
        assert rep.status == "fail"
        assert rep.exact_violations == [348]
        assert rep.holds_from == 349

    def test_threshold_override(self, table20k):
        rep = verify_theorem("double-turan-companion", table20k, threshold_override=349)
        assert rep.status == "pass"
        assert rep.exact_violations == []
        assert rep.sharpness_witness == 348

    def test_table_too_small(self, table2k):
        with pytest.raises(ValueError):
            verify_theorem("A", table2k)

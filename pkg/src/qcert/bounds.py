"""Certified error budgets and two-sided envelopes for q(n+s).

For each truncation order N >= 1 and shift s >= 0 there is an explicit
floor n_min(N, s) and a constant er_total such that for all n >= n_min

    prefactor(n) * L(x) <= q(n+s) <= prefactor(n) * U(x),
    x = n^{-1/2},  prefactor(n) = e^{pi sqrt(n/3)} / (4*3^{1/4} n^{3/4}),

where L/U are the degree-N expansion polynomial minus/plus er_total *
x^{N+1}.  This module computes every ingredient as a certified upper
enclosure: the Bessel-series tail constant, the exponential/binomial
factor tails, their combinations, and the final budget, plus the floor
itself.

Every bound is *one-sided by design*: budgets are used only as error
radii, so we keep certified upper endpoints (a bigger radius is sound,
a smaller one is not).  The floor takes the upper endpoint of its
enclosure before the ceiling, which can only make it more conservative;
the acceptance bounds (5019 for N=14, 18502 for N=24) cap the allowed
slack.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache

from .coeffs import bessel_asym_coeff, expansion_coeff, shift_sigma
from .enclosures import (
    enclose_bessel_i1,
    enclose_cosh,
    enclose_exp,
    enclose_log,
    enclose_pi,
)
from .intervals import DEFAULT_PRECISION, Dyadic, Interval
from .ring import RingElem

__all__ = [
    "decay_threshold",
    "n_min",
    "window_max",
    "ErrorBudget",
    "error_budget",
    "bessel_arg",
    "bessel_main_term",
    "SandwichResult",
    "check_main_term_sandwich",
    "prefactor",
    "BoundPoly",
    "bound_poly",
    "bound_value",
    "x_of",
    "error_total_interval",
]


def _iv(value: Fraction | int, prec: int) -> Interval:
    return Interval.from_fraction(Fraction(value), prec)


def _half_power(base: Fraction, twice_exp: int, prec: int) -> Interval:
    """base**(twice_exp/2) for base >= 0, exact integer part, sqrt rest."""
    if twice_exp < 0:
        return Interval.point(1).div(_half_power(base, -twice_exp, prec), prec)
    out = _iv(base ** (twice_exp // 2), prec)
    if twice_exp % 2:
        out = out.mul(_iv(base, prec).sqrt(prec), prec)
    return out


def decay_threshold(m: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Threshold x0(m) with exp(-2x/3) < x^-m for x >= x0(m):
    1 for m = 1, else 4m log m - 3m log log m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    if m == 1:
        return Interval.point(1)
    log_m = enclose_log(Interval.point(m), prec)
    log_log_m = enclose_log(log_m, prec)
    return (
        log_m.mul(Interval.point(4 * m), prec)
        .sub(log_log_m.mul(Interval.point(3 * m), prec), prec)
    )


@lru_cache(maxsize=None)
def n_min(N: int, s: int, prec: int = DEFAULT_PRECISION) -> int:
    """Validity floor for the order-N, shift-s expansion: the largest of
    206, the ceiling of the upper enclosure of ((72/pi^2) T^2 - 1)/24
    with T = decay_threshold(N+2), and ceil(2(24s+1)/3).

    Taking the upper endpoint before the ceiling can only raise the
    floor, which keeps every downstream claim (stated for n >= floor)
    sound."""
    if N < 1 or s < 0:
        raise ValueError("need N >= 1 and s >= 0")
    t = decay_threshold(N + 2, prec)
    pi_sq = enclose_pi(prec).pow_int(2, prec)
    branch = (
        t.pow_int(2, prec)
        .mul(Interval.point(72), prec)
        .div(pi_sq, prec)
        .sub(Interval.point(1), prec)
        .div(Interval.point(24), prec)
    )
    hi = branch.hi.to_fraction()
    decay_branch = math.ceil(hi)
    shift_branch = math.ceil(Fraction(2 * (24 * s + 1), 3))
    return max(206, decay_branch, shift_branch)


def window_max(N: int, shifts: tuple[int, ...], prec: int = DEFAULT_PRECISION) -> int:
    """Largest validity floor over a set of shifts."""
    return max(n_min(N, s, prec) for s in shifts)


@dataclass(frozen=True)
class ErrorBudget:
    """Certified upper bounds for every truncation constant at (N, s).

    Fields are dyadic upper endpoints; er_total is the radius of the
    degree-(N+1) error term of L/U.
    """

    N: int
    s: int
    er_i1_asym: Dyadic      # I1 large-argument series remainder constant
    er_exp: Dyadic          # exponential-factor tail
    er_binom: Dyadic        # binomial-factor tail
    er_exp_binom: Dyadic    # tail of the product of those two factors
    er_bessel_shift: Dyadic # tail of the shifted Bessel polynomial factor
    er_bessel: Dyadic       # Bessel factor combined with series remainder
    growth_const: Dyadic    # the coefficient-growth envelope constant
    er_total: Dyadic        # final two-sided radius

    def all_fields(self) -> dict[str, Dyadic]:
        return {
            "er_i1_asym": self.er_i1_asym,
            "er_exp": self.er_exp,
            "er_binom": self.er_binom,
            "er_exp_binom": self.er_exp_binom,
            "er_bessel_shift": self.er_bessel_shift,
            "er_bessel": self.er_bessel,
            "growth_const": self.growth_const,
            "er_total": self.er_total,
        }


@lru_cache(maxsize=None)
def _budget_parts(N: int, s: int, prec: int) -> dict[str, Interval]:
    """Interval values of every budget constant (upper endpoints are the
    published budget; full intervals kept for composition)."""
    if N < 1 or s < 0:
        raise ValueError("need N >= 1 and s >= 0")
    from .intervals import workprec

    with workprec(prec):
        pi = enclose_pi(prec)
        sqrt3 = Interval.point(3).sqrt(prec)
        sigma = shift_sigma(s)
        sigma_iv = _iv(sigma, prec)
        two4s1 = 24 * s + 1
        cosh_term = enclose_cosh(pi * _iv(Fraction(two4s1, 72), prec).sqrt(prec), prec)
        a_n = _iv(abs(bessel_asym_coeff(N)), prec)
        a_n1 = _iv(abs(bessel_asym_coeff(N + 1)), prec)
        log_n1 = enclose_log(Interval.point(N + 1), prec)

        # I1 asymptotic remainder constant
        er_i1 = (
            _half_power(Fraction(3), N + 1, prec)
            / pi.pow_int(N + 1, prec)
            * (
                (1 + 9 / log_n1 + Fraction(9, N + 2)) / (2 * pi).sqrt(prec)
                + (Interval.point(2).sqrt(prec) + 1 / _iv(Fraction(2 * N + 5, 2), prec).sqrt(prec))
                / log_n1
            )
            * a_n1
        )

        # exponential-factor tail
        er_exp = (
            Fraction(4, 3)
            * (2 * pi / 3).sqrt(prec)
            / _half_power(Fraction(N), 3, prec)
            * _half_power(sigma, N + 2, prec)
            * cosh_term
        )

        # binomial-factor tail
        er_binom = Fraction(4, 3) * _half_power(sigma, N + 1, prec)

        # product tail
        pi_over_2sqrt3 = pi / sqrt3.scale(1)
        er_exp_binom = (
            (_half_power(Fraction(N), 3, prec) * Fraction(4, 3) + 1) * er_exp
            + pi_over_2sqrt3 * _half_power(sigma, N + 2, prec)
            + er_binom
            * (1 + pi_over_2sqrt3 * sigma_iv + (pi * two4s1).sqrt(prec) / 72 * cosh_term)
        )

        # shifted Bessel polynomial tail
        er_bessel_shift = (
            a_n.scale(2) / 3 * (sigma_iv + 3 / pi.pow_int(2, prec)).pow_int(N // 2 + 1, prec)
            + a_n.scale(2)
            / (sqrt3 * pi)
            * (sigma_iv.sqrt(prec) + sqrt3 / pi).pow_int(2 * ((N - 1) // 2) + 2, prec)
        )

        # combined Bessel tail
        er_bessel = (
            (sqrt3 / pi).pow_int(N + 1, prec) * a_n).scale(3) + (
            1 + (3 / (pi * _iv(2 * two4s1, prec).sqrt(prec))).pow_int(N + 1, prec).scale(2)
        ) * (er_bessel_shift + er_i1)

        # growth envelope constant
        growth = (
            1
            + pi_over_2sqrt3 * sigma_iv.sqrt(prec)
            + (pi * two4s1).sqrt(prec) / 12 * cosh_term
        )

        floor = n_min(N, s, prec)
        er_total = (
            a_n
            * (
                pi * Fraction(1 << (N - 1)) / sqrt3 * sigma_iv.sqrt(prec)
                + growth * (1 + Fraction(1 << (N + 1), 3))
            )
            * _half_power(sigma, N + 1, prec)
            + (1 + pi_over_2sqrt3 * sigma_iv + growth / 12) * er_bessel
            + a_n.scale(1) * er_exp_binom
            + er_exp_binom * er_bessel / _half_power(Fraction(floor), N + 1, prec)
        )

    return {
        "er_i1_asym": er_i1,
        "er_exp": er_exp,
        "er_binom": er_binom,
        "er_exp_binom": er_exp_binom,
        "er_bessel_shift": er_bessel_shift,
        "er_bessel": er_bessel,
        "growth_const": growth,
        "er_total": er_total,
    }


def error_budget(N: int, s: int, prec: int = DEFAULT_PRECISION) -> ErrorBudget:
    parts = _budget_parts(N, s, prec)
    return ErrorBudget(N=N, s=s, **{k: v.hi for k, v in parts.items()})


def error_total_interval(N: int, s: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Two-sided enclosure of the final radius (the budget keeps only
    the upper endpoint; disproof arguments need the lower one too)."""
    return _budget_parts(N, s, prec)["er_total"]


# -- main-term sandwich (Bessel form) ---------------------------------------


def bessel_arg(n: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """nu(n) = pi sqrt(24n+1) / (6 sqrt2) = pi sqrt(2(24n+1)) / 12."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return (
        enclose_pi(prec)
        .mul(Interval.point(2 * (24 * n + 1)).sqrt(prec), prec)
        .div(Interval.point(12), prec)
    )


def bessel_main_term(n: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """M(n) = sqrt2 pi^2 / (12 nu) * I1(nu)."""
    nu = bessel_arg(n, prec)
    pi = enclose_pi(prec)
    return (
        Interval.point(2)
        .sqrt(prec)
        .mul(pi.pow_int(2, prec), prec)
        .div(nu.mul(Interval.point(12), prec), prec)
        .mul(enclose_bessel_i1(nu, prec), prec)
    )


class SandwichResult(Enum):
    HOLDS = "holds"
    FAILS = "fails"
    OUT_OF_REGIME = "out-of-regime"


def check_main_term_sandwich(
    table, n: int, m: int, prec: int = DEFAULT_PRECISION, max_prec: int = 1536
) -> SandwichResult:
    """Certified check of M(n)(1 - 4/nu^m) <= q(n) <= M(n)(1 + 4/nu^m),
    valid only when nu(n) >= max(26, decay_threshold(m+1)).

    The regime precondition is itself checked with certified enclosures;
    if it cannot be decided the precision doubles, and a certified
    failure of the precondition reports OUT_OF_REGIME (distinct from a
    sandwich failure).
    """
    q_n = table[n]
    p = prec
    while True:
        nu = bessel_arg(n, p)
        thr = decay_threshold(m + 1, p)
        in_regime = nu.lo.cmp_fraction(26) >= 0 and nu.lo >= thr.hi
        out_regime = nu.hi.cmp_fraction(26) < 0 or nu.hi < thr.lo
        if not in_regime and not out_regime and p < max_prec:
            p *= 2
            continue
        if not in_regime:
            return SandwichResult.OUT_OF_REGIME
        main = bessel_main_term(n, p)
        radius = Interval.point(4).div(nu.pow_int(m, p), p)
        lower = main.mul(Interval.point(1).sub(radius, p), p)
        upper = main.mul(Interval.point(1).add(radius, p), p)
        # conservative side: certified bracket must clear exact q(n)
        if lower.hi.cmp_fraction(q_n) <= 0 <= upper.lo.cmp_fraction(q_n):
            return SandwichResult.HOLDS
        if p < max_prec:
            p *= 2
            continue
        return SandwichResult.FAILS


# -- L/U envelopes -----------------------------------------------------------


@lru_cache(maxsize=8192)
def prefactor(n: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """e^{pi sqrt(n/3)} / (4 * 3^{1/4} * n^{3/4})."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pi = enclose_pi(prec)
    exp_arg = pi.mul(_iv(Fraction(n, 3), prec).sqrt(prec), prec)
    numerator = enclose_exp(exp_arg, prec)
    root4_3 = Interval.point(3).sqrt(prec).sqrt(prec)
    n_34 = Interval.point(n**3).sqrt(prec).sqrt(prec)
    return numerator.div(root4_3.mul(n_34, prec).scale(2), prec)


@dataclass(frozen=True)
class BoundPoly:
    """One side of the envelope: sum of exact ring coefficients for
    degrees 0..N plus a signed error radius at degree N+1, valid for
    0 < x <= x_max (i.e. n >= floor)."""

    s: int
    N: int
    side: int  # +1 for the upper envelope U, -1 for the lower envelope L
    coeffs: tuple[RingElem, ...]
    coeff_ivs: tuple[Interval, ...]
    err: Dyadic  # certified upper bound of the radius (always positive)
    x_max: Dyadic
    floor: int
    prec: int

    def eval_iv(self, x: Interval) -> Interval:
        """Interval enclosure of this exact polynomial at x (Horner).

        The degree-(N+1) coefficient is the point +-err: this evaluates
        the specific envelope polynomial, which is what the sandwich
        guarantee is stated for.  (The positivity certifier instead
        treats the error coefficient as a box containing the exact
        radius; that happens there, not here.)
        """
        p = self.prec
        signed = self.err if self.side > 0 else -self.err
        acc = Interval(signed, signed)
        for c in reversed(self.coeff_ivs):
            acc = acc.mul(x, p).add(c, p)
        return acc


ZERO_D = Dyadic(0)


@lru_cache(maxsize=None)
def bound_poly(s: int, N: int, side: int, prec: int = DEFAULT_PRECISION) -> BoundPoly:
    if side not in (1, -1):
        raise ValueError("side must be +1 (upper) or -1 (lower)")
    coeffs = tuple(expansion_coeff(m, s) for m in range(N + 1))
    coeff_ivs = tuple(c.eval_iv(prec) for c in coeffs)
    budget = error_budget(N, s, prec)
    floor = n_min(N, s, prec)
    x_max = _div_up_invsqrt(floor, prec)
    return BoundPoly(
        s=s,
        N=N,
        side=side,
        coeffs=coeffs,
        coeff_ivs=coeff_ivs,
        err=budget.er_total,
        x_max=x_max,
        floor=floor,
        prec=prec,
    )


def _div_up_invsqrt(n: int, prec: int) -> Dyadic:
    """Upper dyadic bound of n**(-1/2)."""
    root_lo = Interval.point(n).sqrt(prec).lo
    return Interval.point(1).div(Interval(root_lo, root_lo), prec).hi


@lru_cache(maxsize=8192)
def x_of(n: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Enclosure of n**(-1/2)."""
    return Interval.point(1).div(Interval.point(n).sqrt(prec), prec)


def bound_value(n: int, s: int, N: int, side: int, prec: int = DEFAULT_PRECISION) -> Interval:
    """Certified enclosure of prefactor(n) * (L or U)(n^{-1/2}).

    The sandwich statement is: upper envelope's *lower* endpoint above
    q(n+s), lower envelope's *upper* endpoint below it.
    """
    poly = bound_poly(s, N, side, prec)
    if n < poly.floor:
        raise ValueError(f"n={n} below the validity floor {poly.floor} for (N={N}, s={s})")
    return prefactor(n, prec).mul(poly.eval_iv(x_of(n, prec)), prec)

"""Dyadic numbers and outward-rounded interval arithmetic.

This is the certified-arithmetic substrate for the whole package.  A
``Dyadic`` is an exact number m * 2**e with arbitrary-precision integer
mantissa; an ``Interval`` is a pair of dyadics [lo, hi].  Every interval
operation returns an interval that *contains* the exact set image of its
inputs (outward rounding), which is the single correctness contract here.
Nothing is correctly rounded; endpoints are only guaranteed to bracket.

Precision is the working mantissa width in bits.  It can be passed
explicitly to any operation, or set per thread with ``workprec``:

    with workprec(384):
        z = x * y        # operators use the thread's current precision

Mantissas are plain Python ints, so there is no overflow and no hidden
rounding anywhere except the explicit directed roundings below.
"""

from __future__ import annotations

import threading
from contextlib import contextmanager
from fractions import Fraction

__all__ = [
    "DEFAULT_PRECISION",
    "MIN_PRECISION",
    "Dyadic",
    "Interval",
    "DomainError",
    "get_precision",
    "workprec",
]

MIN_PRECISION = 16
DEFAULT_PRECISION = 192

_state = threading.local()


class DomainError(ValueError):
    """Raised when an operation's input leaves its mathematical domain
    (division by an interval containing zero, sqrt/log of negatives)."""


def get_precision() -> int:
    return getattr(_state, "prec", DEFAULT_PRECISION)


@contextmanager
def workprec(bits: int):
    """Set the per-thread default precision for interval operators."""
    if bits < MIN_PRECISION:
        raise ValueError(f"precision must be >= {MIN_PRECISION} bits, got {bits}")
    old = get_precision()
    _state.prec = bits
    try:
        yield
    finally:
        _state.prec = old


def _round_mantissa(man: int, exp: int, prec: int, up: bool) -> tuple[int, int]:
    """Directed rounding of man*2**exp to at most prec mantissa bits.

    Rounds toward +inf when up is true, toward -inf otherwise, so the
    result brackets the exact value from the requested side.
    """
    if man == 0:
        return 0, 0
    excess = man.bit_length() - prec
    if excess <= 0:
        return man, exp
    q, r = divmod(man, 1 << excess)  # floor division: man = q*2**excess + r
    if up and r:
        q += 1
    return q, exp + excess


def _canonical(man: int, exp: int) -> tuple[int, int]:
    if man == 0:
        return 0, 0
    shift = (man & -man).bit_length() - 1  # count trailing zero bits
    return man >> shift, exp + shift


class Dyadic:
    """Exact dyadic rational m * 2**e, canonical (m odd, or m = e = 0)."""

    __slots__ = ("man", "exp")

    def __init__(self, man: int, exp: int = 0):
        man, exp = _canonical(man, exp)
        self.man = man
        self.exp = exp

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_fraction(value: Fraction | int, prec: int, up: bool) -> "Dyadic":
        """Directed conversion of an exact rational to <= prec bits."""
        if isinstance(value, int):
            man, exp = _round_mantissa(value, 0, prec, up)
            return Dyadic(man, exp)
        num, den = value.numerator, value.denominator
        if den == 1:
            man, exp = _round_mantissa(num, 0, prec, up)
            return Dyadic(man, exp)
        dbits = den.bit_length()
        if den == 1 << (dbits - 1):  # already dyadic: exact unless too wide
            man, exp = _round_mantissa(num, 1 - dbits, prec, up)
            return Dyadic(man, exp)
        return _div_dir(num, 0, den, 0, prec, up)

    # -- exact arithmetic (mantissa may grow) -------------------------

    def __add__(self, other: "Dyadic") -> "Dyadic":
        if self.man == 0:
            return other
        if other.man == 0:
            return self
        e = min(self.exp, other.exp)
        return Dyadic((self.man << (self.exp - e)) + (other.man << (other.exp - e)), e)

    def __sub__(self, other: "Dyadic") -> "Dyadic":
        return self + (-other)

    def __neg__(self) -> "Dyadic":
        d = Dyadic.__new__(Dyadic)
        d.man, d.exp = -self.man, self.exp
        return d

    def __mul__(self, other: "Dyadic") -> "Dyadic":
        return Dyadic(self.man * other.man, self.exp + other.exp)

    def __abs__(self) -> "Dyadic":
        return -self if self.man < 0 else self

    def scale(self, k: int) -> "Dyadic":
        """Exact multiplication by 2**k."""
        if self.man == 0:
            return self
        d = Dyadic.__new__(Dyadic)
        d.man, d.exp = self.man, self.exp + k
        return d

    def round(self, prec: int, up: bool) -> "Dyadic":
        man, exp = _round_mantissa(self.man, self.exp, prec, up)
        return Dyadic(man, exp)

    # -- comparisons (exact) ------------------------------------------

    def _cmp(self, other: "Dyadic") -> int:
        if self.man == 0 or other.man == 0 or (self.man > 0) != (other.man > 0):
            a, b = self.man, other.man
            return (a > b) - (a < b) if (a == 0 or b == 0) else (1 if a > b else -1)
        e = min(self.exp, other.exp)
        a = self.man << (self.exp - e)
        b = other.man << (other.exp - e)
        return (a > b) - (a < b)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Dyadic) and self.man == other.man and self.exp == other.exp

    def __lt__(self, other: "Dyadic") -> bool:
        return self._cmp(other) < 0

    def __le__(self, other: "Dyadic") -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other: "Dyadic") -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other: "Dyadic") -> bool:
        return self._cmp(other) >= 0

    def __hash__(self):
        return hash((self.man, self.exp))

    def cmp_fraction(self, value: Fraction | int) -> int:
        """Exact three-way comparison against a rational."""
        num = value.numerator if isinstance(value, Fraction) else value
        den = value.denominator if isinstance(value, Fraction) else 1
        # self - value has the sign of man*den*2^exp - num  (den > 0)
        if self.exp >= 0:
            lhs = self.man * den << self.exp
            rhs = num
        else:
            lhs = self.man * den
            rhs = num << -self.exp
        return (lhs > rhs) - (lhs < rhs)

    # -- conversions ---------------------------------------------------

    def to_fraction(self) -> Fraction:
        if self.exp >= 0:
            return Fraction(self.man << self.exp)
        return Fraction(self.man, 1 << -self.exp)

    def __float__(self) -> float:
        try:
            return self.man * 2.0 ** self.exp
        except OverflowError:
            m, e = _round_mantissa(self.man, self.exp, 53, up=False)
            try:
                return m * 2.0 ** e
            except OverflowError:
                return float("inf") if m > 0 else float("-inf")

    def __repr__(self) -> str:
        return f"Dyadic({self.man}, {self.exp})"

    def __str__(self) -> str:
        return f"{float(self):.17g}"

    def decimal(self, digits: int = 24, up: bool = False) -> str:
        """Decimal string with `digits` significant figures, rounded in
        the requested direction (so printed bounds stay bounds)."""
        if self.man == 0:
            return "0"
        f = self.to_fraction()
        neg = f < 0
        if neg:
            f = -f
        # exact order of magnitude: e10 = floor(log10 f)
        e10 = len(str(f.numerator)) - len(str(f.denominator))
        if f < Fraction(10) ** e10:
            e10 -= 1
        scaled = f / Fraction(10) ** (e10 - digits + 1)  # in [10^(d-1), 10^d)
        q, r = divmod(scaled.numerator, scaled.denominator)
        if r and (up != neg):
            q += 1
        if q >= 10**digits:  # 9.99... rounded up a magnitude
            q //= 10
            e10 += 1
        text = str(q).rstrip("0") or "0"
        mantissa = text[0] + ("." + text[1:] if len(text) > 1 else "")
        return f"{'-' if neg else ''}{mantissa}e{e10:+d}"

    @property
    def is_zero(self) -> bool:
        return self.man == 0

    @property
    def sign(self) -> int:
        return (self.man > 0) - (self.man < 0)


ZERO = Dyadic(0)


def _div_dir(ma: int, ea: int, mb: int, eb: int, prec: int, up: bool) -> Dyadic:
    """Directed rounding of (ma*2**ea)/(mb*2**eb) to ~prec bits."""
    if mb < 0:
        ma, mb = -ma, -mb
    # scale numerator so the integer quotient carries prec+2 significant bits
    shift = prec + 2 - (ma.bit_length() - mb.bit_length())
    if shift >= 0:
        num, den = ma << shift, mb
    else:
        num, den = ma, mb << -shift
    q, r = divmod(num, den)
    if up and r:
        q += 1
    return Dyadic(q, ea - eb - shift)


def _sqrt_dir(man: int, exp: int, prec: int) -> tuple[Dyadic, Dyadic]:
    """Bracketing pair for sqrt(man*2**exp), man >= 0, each ~prec bits."""
    if man == 0:
        return ZERO, ZERO
    if exp & 1:
        man <<= 1
        exp -= 1
    # isqrt(man << 2j) has about (bitlen + 2j)/2 bits; aim for prec+2
    j = max(0, prec + 2 - (man.bit_length() + 1) // 2)
    from math import isqrt

    r = isqrt(man << (2 * j))
    half = exp // 2 - j
    if r * r == man << (2 * j):  # perfect square: exact result
        d = Dyadic(r, half)
        return d.round(prec, up=False), d.round(prec, up=True)
    lo = Dyadic(r, half).round(prec, up=False)
    hi = Dyadic(r + 1, half).round(prec, up=True)
    return lo, hi


class Interval:
    """Closed interval [lo, hi] with dyadic endpoints, lo <= hi.

    Arithmetic via operators uses the per-thread precision; the named
    methods accept an explicit prec argument.
    """

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Dyadic, hi: Dyadic):
        if lo > hi:
            raise ValueError(f"invalid interval endpoints: [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    # -- constructors --------------------------------------------------

    @staticmethod
    def point(value: Dyadic | int) -> "Interval":
        d = value if isinstance(value, Dyadic) else Dyadic(value)
        return Interval(d, d)

    @staticmethod
    def from_fraction(value: Fraction | int, prec: int | None = None) -> "Interval":
        prec = prec or get_precision()
        if isinstance(value, int) or value.denominator == 1:
            return Interval.point(int(value))
        return Interval(
            Dyadic.from_fraction(value, prec, up=False),
            Dyadic.from_fraction(value, prec, up=True),
        )

    @staticmethod
    def hull(*items: "Interval") -> "Interval":
        return Interval(min(i.lo for i in items), max(i.hi for i in items))

    # -- arithmetic -----------------------------------------------------

    def add(self, other: "Interval", prec: int | None = None) -> "Interval":
        prec = prec or get_precision()
        return Interval(
            (self.lo + other.lo).round(prec, up=False),
            (self.hi + other.hi).round(prec, up=True),
        )

    def sub(self, other: "Interval", prec: int | None = None) -> "Interval":
        prec = prec or get_precision()
        return Interval(
            (self.lo - other.hi).round(prec, up=False),
            (self.hi - other.lo).round(prec, up=True),
        )

    def neg(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def mul(self, other: "Interval", prec: int | None = None) -> "Interval":
        prec = prec or get_precision()
        products = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return Interval(
            min(products).round(prec, up=False),
            max(products).round(prec, up=True),
        )

    def div(self, other: "Interval", prec: int | None = None) -> "Interval":
        prec = prec or get_precision()
        if other.lo.sign <= 0 <= other.hi.sign:
            raise DomainError(f"division by interval containing zero: {other}")
        quotients = [
            _div_dir(a.man, a.exp, b.man, b.exp, prec, up)
            for a in (self.lo, self.hi)
            for b in (other.lo, other.hi)
            for up in (False, True)
        ]
        return Interval(min(quotients), max(quotients))

    def pow_int(self, k: int, prec: int | None = None) -> "Interval":
        """Integer power; even powers of straddling intervals floor at 0."""
        prec = prec or get_precision()
        if k == 0:
            return Interval.point(1)
        if k < 0:
            return Interval.point(1).div(self.pow_int(-k, prec), prec)
        if k % 2 == 0 and self.lo.sign < 0 <= self.hi.sign:
            m = max(abs(self.lo), abs(self.hi))
            return Interval(ZERO, (Interval(m, m).pow_int(k, prec)).hi)
        result = Interval.point(1)
        base = self
        e = k
        while e:  # square-and-multiply keeps the op count at O(log k)
            if e & 1:
                result = result.mul(base, prec)
            e >>= 1
            if e:
                base = base.mul(base, prec)
        return result

    def sqrt(self, prec: int | None = None) -> "Interval":
        prec = prec or get_precision()
        if self.lo.sign < 0:
            raise DomainError(f"sqrt of interval with negative endpoint: {self}")
        lo, _ = _sqrt_dir(self.lo.man, self.lo.exp, prec)
        _, hi = _sqrt_dir(self.hi.man, self.hi.exp, prec)
        return Interval(lo, hi)

    def scale(self, k: int) -> "Interval":
        """Exact multiplication by 2**k."""
        return Interval(self.lo.scale(k), self.hi.scale(k))

    def __add__(self, other):
        return self.add(_coerce(other))

    def __radd__(self, other):
        return self.add(_coerce(other))

    def __sub__(self, other):
        return self.sub(_coerce(other))

    def __rsub__(self, other):
        return _coerce(other).sub(self)

    def __mul__(self, other):
        return self.mul(_coerce(other))

    def __rmul__(self, other):
        return self.mul(_coerce(other))

    def __truediv__(self, other):
        return self.div(_coerce(other))

    def __rtruediv__(self, other):
        return _coerce(other).div(self)

    def __neg__(self):
        return self.neg()

    def __pow__(self, k: int):
        return self.pow_int(k)

    # -- queries ---------------------------------------------------------

    def contains(self, value: Fraction | int) -> bool:
        return self.lo.cmp_fraction(value) <= 0 <= self.hi.cmp_fraction(value)

    def contains_interval(self, other: "Interval") -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    @property
    def width(self) -> Dyadic:
        return self.hi - self.lo

    @property
    def is_positive(self) -> bool:
        """Certified strictly positive."""
        return self.lo.sign > 0

    @property
    def is_negative(self) -> bool:
        """Certified strictly negative."""
        return self.hi.sign < 0

    def midpoint(self) -> Dyadic:
        return (self.lo + self.hi).scale(-1)

    def mag(self) -> Dyadic:
        """max |x| over the interval."""
        return max(abs(self.lo), abs(self.hi))

    def to_fractions(self) -> tuple[Fraction, Fraction]:
        return self.lo.to_fraction(), self.hi.to_fraction()

    def __repr__(self) -> str:
        return f"Interval[{float(self.lo)!r}, {float(self.hi)!r}]"


def _coerce(value) -> Interval:
    if isinstance(value, Interval):
        return value
    if isinstance(value, int):
        return Interval.point(value)
    if isinstance(value, Fraction):
        return Interval.from_fraction(value)
    if isinstance(value, Dyadic):
        return Interval(value, value)
    raise TypeError(f"cannot mix Interval with {type(value).__name__}")


# Spec-facing functional aliases.
def iv_add(a: Interval, b: Interval, prec: int | None = None) -> Interval:
    return a.add(b, prec)


def iv_sub(a: Interval, b: Interval, prec: int | None = None) -> Interval:
    return a.sub(b, prec)


def iv_mul(a: Interval, b: Interval, prec: int | None = None) -> Interval:
    return a.mul(b, prec)


def iv_div(a: Interval, b: Interval, prec: int | None = None) -> Interval:
    return a.div(b, prec)


def iv_neg(a: Interval) -> Interval:
    return a.neg()


def iv_pow_int(a: Interval, k: int, prec: int | None = None) -> Interval:
    return a.pow_int(k, prec)

"""LogScaled: nonnegative reals stored as (iterated) natural logarithms.

A value is (height, top) meaning exp applied `height` times to `top`.
Ordinary constants live at height 1 (top = natural log of the value); the
appendix recursions need height 2 because even the logarithm of
(2D)^(2^(14 d r^4)) overflows a double for moderate r.

When the value is also representable as an exact big integer under a size cap
it is carried along; exact-vs-log agreement within 1e-9 relative slack is an
invariant.  Comparisons refuse to decide within a 1e-6 relative slack band
(returning 0 / raising Indeterminate), unless both sides are exact.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import Indeterminate

EXACT_BIT_CAP = 2_000_000  # keep exact integers up to ~600k decimal digits
REL_SLACK = 1e-6


class LogScaled:
    __slots__ = ("height", "top", "exact")

    def __init__(self, height, top, exact=None):
        if height < 0:
            raise ValueError("height must be >= 0")
        self.height = height
        self.top = float(top)
        self.exact = exact
        if exact is not None:
            if height != 1:
                raise ValueError("exact integers only make sense at height 1")
            lnx = _ln_big(exact)
            if abs(lnx - self.top) > 1e-9 * max(1.0, abs(self.top)):
                raise ValueError("exact/log disagreement beyond slack")

    # --- constructors ---

    @staticmethod
    def from_exact(n):
        if n < 0:
            raise ValueError("LogScaled values are nonnegative")
        if n == 0:
            return LogScaled(0, 0.0)
        if n.bit_length() > EXACT_BIT_CAP:
            return LogScaled(1, _ln_big(n))
        return LogScaled(1, _ln_big(n), n)

    @staticmethod
    def from_ln(lnv, exact=None):
        return LogScaled(1, lnv, exact)

    @staticmethod
    def from_float(x):
        if x < 0:
            raise ValueError("LogScaled values are nonnegative")
        if x == 0:
            return LogScaled(0, 0.0)
        return LogScaled(1, math.log(x))

    @staticmethod
    def power(base, exponent):
        """base ** exponent with base an int > 0 and exponent int/Fraction."""
        if base <= 0:
            raise ValueError("base must be positive")
        lnv = float(exponent) * _ln_big(base)
        exact = None
        if isinstance(exponent, int) and exponent >= 0:
            bits = exponent * base.bit_length()
            if bits <= EXACT_BIT_CAP:
                exact = base ** exponent
        return LogScaled.from_ln(lnv, exact)

    # --- views ---

    @property
    def ln_value(self):
        """Natural log of the value; only finite-representable for height <= 1."""
        if self.height == 0:
            return math.log(self.top) if self.top > 0 else float("-inf")
        if self.height == 1:
            return self.top
        raise OverflowError("ln overflows a double at height {}".format(self.height))

    def ln(self):
        """The logarithm, as a LogScaled one level down."""
        if self.height == 0:
            return LogScaled.from_float(math.log(self.top))
        if self.height == 1:
            return LogScaled.from_float(self.top) if self.top > 0 else LogScaled(0, 0.0)
        return LogScaled(self.height - 1, self.top)

    def exp(self):
        return LogScaled(self.height + 1, self.top)

    def normalized(self):
        """Lower the height while the top survives as a double."""
        h, t = self.height, self.top
        while h >= 2 and t < 700.0:
            t = math.exp(t)
            h -= 1
        return LogScaled(h, t, self.exact if h == self.height else None)

    # --- arithmetic (heights 0/1 only; towers are compared, not combined) ---

    def mul(self, other):
        other = _coerce(other)
        a, b = self.normalized(), other.normalized()
        if a.height > 1 or b.height > 1:
            raise ValueError("generic mul is not supported at tower height >= 2")
        exact = None
        if a.exact is not None and b.exact is not None:
            prod = a.exact * b.exact
            if prod.bit_length() <= EXACT_BIT_CAP:
                exact = prod
        return LogScaled.from_ln(a.ln_value + b.ln_value, exact)

    def add(self, other):
        other = _coerce(other)
        a, b = self.normalized(), other.normalized()
        if a.height > 1 or b.height > 1:
            raise ValueError("generic add is not supported at tower height >= 2")
        exact = None
        if a.exact is not None and b.exact is not None:
            s = a.exact + b.exact
            if s.bit_length() <= EXACT_BIT_CAP:
                exact = s
        return LogScaled.from_ln(_logaddexp(a.ln_value, b.ln_value), exact)

    def pow(self, exponent):
        a = self.normalized()
        if a.height > 1:
            raise ValueError("generic pow is not supported at tower height >= 2")
        exact = None
        if a.exact is not None and isinstance(exponent, int) and exponent >= 0:
            bits = exponent * max(a.exact.bit_length(), 1)
            if bits <= EXACT_BIT_CAP:
                exact = a.exact ** exponent
        return LogScaled.from_ln(float(exponent) * a.ln_value, exact)

    # --- comparison ---

    def cmp(self, other, rel_slack=REL_SLACK):
        """-1 / 0 / 1 with 0 meaning 'inside the slack band' (indeterminate)."""
        other = _coerce(other)
        if self.exact is not None and other.exact is not None:
            return (self.exact > other.exact) - (self.exact < other.exact)
        a, b = self.normalized(), other.normalized()
        k = max(a.height, b.height, 1)
        ta = _lower(a, k)
        tb = _lower(b, k)
        if ta is None or tb is None:
            # one side collapsed to a non-positive iterated log: it is smaller
            if ta is None and tb is None:
                return 0
            return -1 if ta is None else 1
        scale = max(abs(ta), abs(tb), 1.0)
        if abs(ta - tb) <= rel_slack * scale:
            return 0
        return -1 if ta < tb else 1

    def require_cmp(self, other, expected, context=""):
        got = self.cmp(other)
        if got == 0:
            raise Indeterminate("comparison inside slack band: " + context)
        return got == expected

    def __repr__(self):
        if self.height <= 1:
            tag = "~e^{:.6g}".format(self.ln_value)
        else:
            tag = "tower(h={}, top={:.6g})".format(self.height, self.top)
        if self.exact is not None and self.exact.bit_length() <= 64:
            tag += " ={}".format(self.exact)
        return "LogScaled({})".format(tag)

    def to_json(self):
        out = {"height": self.height, "top": _fmt(self.top)}
        if self.height == 1:
            out["ln"] = _fmt(self.top)
        out["exact"] = str(self.exact) if self.exact is not None else None
        return out


def _fmt(x):
    """12-significant-digit decimal string, the report formatting contract."""
    return "{:.12g}".format(x)


def _ln_big(n):
    """math.log for arbitrarily large positive ints."""
    if n <= 0:
        raise ValueError("positive input required")
    bits = n.bit_length()
    if bits <= 512:
        return math.log(n)
    shift = bits - 512
    return math.log(n >> shift) + shift * math.log(2.0)


def _logaddexp(x, y):
    if x < y:
        x, y = y, x
    return x + math.log1p(math.exp(y - x))


def _lower(v, k):
    """log^k of the value, computed as log^(k-height) of the top; None if it dies."""
    t = v.top
    h = v.height
    while h < k:
        if t <= 0:
            return None
        t = math.log(t)
        h += 1
    return t


def _coerce(x):
    if isinstance(x, LogScaled):
        return x
    if isinstance(x, int):
        return LogScaled.from_exact(x)
    if isinstance(x, Fraction):
        return LogScaled.from_float(float(x))
    if isinstance(x, float):
        return LogScaled.from_float(x)
    raise TypeError("cannot interpret {!r} as LogScaled".format(x))

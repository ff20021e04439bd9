"""Exact integer and rational helpers.

Integers are Python ``int`` and rationals are :class:`fractions.Fraction`,
which already keeps the canonical reduced form with a positive denominator.
"""

import math
import re
from fractions import Fraction

_RAT_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*([+-]?\d+))?\s*")


def int_gcd(a: int, b: int) -> int:
    """Nonnegative gcd; ``int_gcd(0, 0) == 0``."""
    return math.gcd(a, b)


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; 0 outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        # the running product is C(n-k+i, i) at every step, so this is exact
        out = out * (n - k + i) // i
    return out


def rat_parse(text: str) -> Fraction:
    """Parse ``"n"`` or ``"n/d"`` (either part may carry a sign)."""
    # accept the unicode minus people paste from typeset tables
    m = _RAT_RE.fullmatch(text.replace("−", "-"))
    if m is None:
        raise ValueError(f"malformed rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ZeroDivisionError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def rat_str(r) -> str:
    """Decimal serialization used in all text and JSON output."""
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"

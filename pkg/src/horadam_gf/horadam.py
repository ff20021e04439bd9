"""Brute-force Horadam sequences straight from the recurrence.

This is the ground truth for the determinant engine and deliberately shares
no code with it.  Numeric parameters give :class:`~fractions.Fraction` terms;
when any parameter is symbolic every term is a :class:`Polynomial`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactnum import rat_parse
from .polyring import Polynomial, parse_poly, scalar_text


def _scalar(value):
    if isinstance(value, Polynomial):
        return value.to_int() if value.is_constant() else value
    if isinstance(value, str):
        try:
            return rat_parse(value)
        except ValueError:
            return _scalar(parse_poly(value))
    return Fraction(value)


@dataclass(frozen=True)
class HoradamParams:
    """Seeds ``w0 = a``, ``w1 = b`` and recurrence ``w[n+2] = p*w[n+1] + q*w[n]``.

    Each entry is a rational constant or a polynomial in the symbols; strings
    are parsed (``"1/2"``, ``"2*t"``).
    """

    a: object
    b: object
    p: object
    q: object

    def __post_init__(self):
        vals = [_scalar(getattr(self, f)) for f in "abpq"]
        if any(isinstance(v, Polynomial) for v in vals):
            vals = [v if isinstance(v, Polynomial) else Polynomial.const(v) for v in vals]
        else:
            vals = [Fraction(v) for v in vals]
        for f, v in zip("abpq", vals):
            object.__setattr__(self, f, v)

    @property
    def symbolic(self) -> bool:
        return isinstance(self.a, Polynomial)

    def as_tuple(self) -> tuple:
        return (self.a, self.b, self.p, self.q)

    def scaled(self, lam) -> "HoradamParams":
        """Same recurrence with seeds multiplied by ``lam``."""
        return HoradamParams(self.a * lam, self.b * lam, self.p, self.q)

    def to_json(self) -> dict:
        return {f: scalar_text(getattr(self, f)) for f in "abpq"}


_PRESETS = {
    "fibonacci": (0, 1, 1, 1),
    "lucas": (2, 1, 1, 1),
    "pell": (0, 1, 2, 1),
    "chebyshev-u": (1, "2*t", "2*t", -1),
}

PRESET_NAMES = tuple(_PRESETS)


def preset(name: str) -> HoradamParams:
    try:
        return HoradamParams(*_PRESETS[name])
    except KeyError:
        raise ValueError(f"unknown preset {name!r}; choose from {', '.join(_PRESETS)}") from None


def symbolic_params() -> HoradamParams:
    """Fully symbolic (a, b, p, q)."""
    return HoradamParams("a", "b", "p", "q")


def horadam_seq(params: HoradamParams, n: int) -> list:
    """``[w_0, ..., w_{n-1}]``."""
    a, b, p, q = params.as_tuple()
    out = []
    prev, cur = a, b
    for _ in range(n):
        out.append(prev)
        prev, cur = cur, p * cur + q * prev
    return out


def power_series_oracle(params: HoradamParams, k: int, n: int) -> list:
    """``[w_0^k, ..., w_{n-1}^k]``: the coefficients of H_k(x)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return [w**k for w in horadam_seq(params, n)]


def mixed_series_oracle(params: HoradamParams, k: int, d: int, n: int) -> list:
    """Coefficients of x^0..x^n of ``sum_m w_m^(k-d) w_(m+1)^d x^(m+1)``."""
    if not 0 <= d <= k:
        raise ValueError("need 0 <= d <= k")
    w = horadam_seq(params, n + 1)
    zero = Polynomial() if params.symbolic else Fraction(0)
    return [zero] + [w[m] ** (k - d) * w[m + 1] ** d for m in range(n)]

"""Generating function of k-th powers of a Horadam sequence via Cramer's rule.

The unknowns are ``[H_k, A_{k,k-1}, ..., A_{k,1}]`` where
``A_{k,d}(x) = sum_n w_n^(k-d) w_(n+1)^d x^(n+1)``.  Expanding
``w_(n+2)^k`` and ``w_n^(k-d) w_(n+1)^d`` binomially gives one linear
equation per unknown; the coefficient matrix is ``delta`` and the same matrix
with its first column replaced by the right-hand side is ``delta_hat``, so
``H_k = det(delta_hat) / det(delta)``.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import kernels
from .errors import PoleError, SymbolicResidueError
from .exactnum import binomial, rat_str
from .horadam import HoradamParams
from .polyring import (
    ONE,
    ZERO,
    Polynomial,
    RationalFunction,
    mul_sub,
    ratfun_reduce,
    rf_to_json,
)

DEFAULT_N = 64

# cross-check Bareiss against cofactor expansion for small matrices
CHECK_DETERMINANTS = os.environ.get("HORADAM_GF_CHECK_DET", "") not in ("", "0")


@dataclass(frozen=True)
class PolyMatrix:
    """Square matrix of polynomials, stored row-major as nested tuples."""

    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(Polynomial.coerce(e) for e in row) for row in self.rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("PolyMatrix must be square with dimension >= 1")
        object.__setattr__(self, "rows", rows)

    @property
    def k(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> list:
        return [row[j] for row in self.rows]

    def with_column(self, j: int, col) -> "PolyMatrix":
        return PolyMatrix(
            tuple(row[:j] + (c,) + row[j + 1 :] for row, c in zip(self.rows, col))
        )

    def to_text(self) -> list:
        return [[e.to_text() for e in row] for row in self.rows]


# ----------------------------------------------------------------- builders
#
# An entry is first built as {power of x: scalar}, with scalars Fractions
# (numeric parameters) or Polynomials (symbolic).  Each row is then scaled by
# the lcm of its denominators, the same factor for delta and delta_hat, which
# leaves their determinant ratio unchanged.


def _system_rows(k: int, params: HoradamParams):
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    a, b, p, q = params.as_tuple()
    pp = [p**e for e in range(k + 1)]
    qp = [q**e for e in range(k + 1)]
    coeffs = []
    rhs = []

    first = [{0: 1, 1: -pp[k], 2: -qp[k]}]
    for j in range(1, k):
        first.append({1: -binomial(k, j) * pp[k - j] * qp[j]})
    coeffs.append(first)
    rhs.append({0: a**k, 1: b**k - a**k * pp[k]})

    for i in range(1, k):
        d = k - i
        row = [{1: -pp[d]}]
        for j in range(1, k):
            entry = {}
            if j <= d:
                entry[1] = -binomial(d, j) * pp[d - j] * qp[j]
            if j == i:
                entry[0] = 1
            row.append(entry)
        coeffs.append(row)
        g = (b**d - a**d * pp[d]) * a ** (k - d)
        rhs.append({1: g})
    return coeffs, rhs


def _row_multiplier(entries) -> int:
    dens = [
        Fraction(v).denominator
        for e in entries
        for v in e.values()
        if not isinstance(v, Polynomial)
    ]
    return reduce(lambda m, d: m * d // math.gcd(m, d), dens, 1)


def _entry(e: dict, mult: int) -> Polynomial:
    coeffs = [0] * (max(e) + 1 if e else 0)
    for power, v in e.items():
        v = v * mult
        coeffs[power] = v if isinstance(v, Polynomial) else Fraction(v).numerator
    return Polynomial.from_x_coefficients(coeffs)


def _build(k: int, params: HoradamParams) -> tuple[PolyMatrix, list]:
    coeffs, rhs = _system_rows(k, params)
    rows, col = [], []
    for row, r in zip(coeffs, rhs):
        mult = _row_multiplier(row + [r])
        rows.append(tuple(_entry(e, mult) for e in row))
        col.append(_entry(r, mult))
    return PolyMatrix(tuple(rows)), col


def build_delta(k: int, params: HoradamParams) -> PolyMatrix:
    """Coefficient matrix of the system in ``[H_k, A_{k,k-1}, ..., A_{k,1}]``."""
    return _build(k, params)[0]


def rhs_vector(k: int, params: HoradamParams) -> list:
    """Right-hand side of the system, scaled like the rows of ``build_delta``."""
    return _build(k, params)[1]


def build_delta_hat(k: int, params: HoradamParams) -> PolyMatrix:
    """``build_delta`` with column 0 replaced by the right-hand side."""
    delta, col = _build(k, params)
    return delta.with_column(0, col)


# ------------------------------------------------------------ determinants


def bareiss_determinant(m: PolyMatrix) -> Polynomial:
    """Fraction-free (single-step Bareiss) determinant."""
    n = m.k
    a = [list(row) for row in m.rows]
    sign = 1
    prev = ONE
    for c in range(n - 1):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pc = a[c][c]
        for i in range(c + 1, n):
            ai, aic = a[i], a[i][c]
            for j in range(c + 1, n):
                # exact by Sylvester's identity; a remainder raises
                ai[j] = mul_sub(ai[j], pc, aic, a[c][j]).exact_div(prev)
        prev = pc
    det = a[n - 1][n - 1]
    return det if sign > 0 else -det


def cofactor_determinant(m: PolyMatrix) -> Polynomial:
    """Laplace expansion along the first row; exponential, for cross-checks."""

    def det(rows):
        if len(rows) == 1:
            return rows[0][0]
        total = ZERO
        for j, e in enumerate(rows[0]):
            if not e:
                continue
            minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
            term = e * det(minor)
            total = total + term if j % 2 == 0 else total - term
        return total

    return det([list(r) for r in m.rows])


def determinant(m: PolyMatrix) -> Polynomial:
    det = bareiss_determinant(m)
    if CHECK_DETERMINANTS and m.k <= 4:
        other = cofactor_determinant(m)
        if other != det:
            raise AssertionError(f"Bareiss {det} != cofactor {other}")
    return det


# ------------------------------------------------------ generating function


@dataclass(frozen=True)
class GfResult:
    k: int
    params: HoradamParams
    numerator: Polynomial
    denominator: Polynomial
    reduced: RationalFunction

    @property
    def unreduced(self) -> RationalFunction:
        return RationalFunction(self.numerator, self.denominator)

    def to_json(self) -> dict:
        red = rf_to_json(self.reduced)
        return {
            "k": self.k,
            "params": self.params.to_json(),
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
            "reduced_num": red["num"],
            "reduced_den": red["den"],
            "text": {
                "numerator": self.numerator.to_text(),
                "denominator": self.denominator.to_text(),
                "reduced": self.reduced.to_text(),
            },
        }


def horadam_gf(k: int, params: HoradamParams) -> GfResult:
    """``H_k(x) = det(delta_hat) / det(delta)`` for the given parameters."""
    delta, col = _build(k, params)
    den = determinant(delta)
    num = determinant(delta.with_column(0, col))
    return GfResult(k, params, num, den, ratfun_reduce(RationalFunction(num, den)))


# ------------------------------------------------------------------ series


def series_coeffs(rf, n: int = DEFAULT_N) -> list:
    """First ``n`` Taylor coefficients at x = 0.

    Fractions when ``rf`` involves only x, otherwise Polynomials in the
    remaining symbols (the x-constant term of the denominator must then be an
    integer that divides every coefficient, in practice 1).
    """
    if isinstance(rf, GfResult):
        rf = rf.reduced
    u = rf.num.x_coefficients()
    d = rf.den.x_coefficients()
    if not d or not d[0]:
        raise PoleError("denominator vanishes at x = 0")
    if rf.variables() <= {"x"}:
        u = [c.to_int() for c in u]
        d = [c.to_int() for c in d]
        d0 = d[0]
        if d0 in (1, -1):
            return [Fraction(c) for c in kernels.series_div(u, d, n, lambda v: v * d0)]
        d0 = Fraction(d0)
        u = [Fraction(c) for c in u]
        return kernels.series_div(u, d, n, lambda v: Fraction(v) / d0)
    if not d[0].is_constant():
        raise SymbolicResidueError(f"x-constant term {d[0]} of the denominator is not a unit")
    d0 = d[0].to_int()
    if d0 == 1:
        div0 = Polynomial.coerce
    else:
        def div0(v):
            return Polynomial.coerce(v).exact_div(d0)
    return kernels.series_div(u, d, n, div0)


def eval_at(rf, x0) -> Fraction:
    """Exact value of ``rf`` at the rational point ``x0``."""
    if isinstance(rf, GfResult):
        rf = rf.reduced
    extra = rf.variables() - {"x"}
    if extra:
        raise SymbolicResidueError(f"symbols {sorted(extra)} remain; cannot evaluate numerically")
    x0 = Fraction(x0)

    def horner(f):
        acc = Fraction(0)
        for c in reversed(f.x_coefficients()):
            acc = acc * x0 + c.to_int()
        return acc

    den = horner(rf.den)
    if den == 0:
        raise PoleError(f"pole at x = {rat_str(x0)}")
    return horner(rf.num) / den

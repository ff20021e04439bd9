"""Sparse multivariate integer polynomials in the fixed variables x, p, q, a, b, t.

Also holds :class:`RationalFunction` and the small expression parser used to
enter fixtures and command-line parameters.
"""

from __future__ import annotations

import ast
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from . import kernels
from .exactnum import rat_str

VARS = ("x", "p", "q", "a", "b", "t")
_INDEX = {v: i for i, v in enumerate(VARS)}
# display order of variables inside one term
_DISPLAY = sorted(range(len(VARS)), key=lambda i: VARS[i])

MINUS_INFINITY = -math.inf
"""Degree of the zero polynomial."""


def _as_int(c) -> int:
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    raise TypeError(f"cannot use {c!r} as an integer polynomial coefficient")


class Polynomial:
    """Immutable sparse polynomial with ``int`` coefficients.

    Internally a dict from packed monomial keys to nonzero coefficients; the
    packing (see ``_kernels_py``) orders keys lexicographically with ``x``
    most significant.
    """

    __slots__ = ("_t", "_hash")

    def __init__(self, terms=None):
        self._t = terms if terms is not None else {}
        self._hash = None

    @classmethod
    def from_terms(cls, terms) -> "Polynomial":
        """Build from ``{exponent tuple: coefficient}`` (tuples may be short)."""
        out = {}
        for exps, c in dict(terms).items():
            c = _as_int(c)
            if not c:
                continue
            exps = tuple(exps) + (0,) * (len(VARS) - len(exps))
            key = kernels.pack(exps)
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return cls(out)

    @classmethod
    def const(cls, c) -> "Polynomial":
        c = _as_int(c)
        return cls({0: c} if c else {})

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Polynomial":
        exps = [0] * len(VARS)
        exps[_INDEX[name]] = power
        return cls({kernels.pack(exps): 1})

    @classmethod
    def coerce(cls, value) -> "Polynomial":
        if isinstance(value, Polynomial):
            return value
        return cls.const(value)

    # ------------------------------------------------------------------ views

    def terms(self) -> dict:
        """``{exponent tuple: coefficient}`` in canonical (ascending) order."""
        return {kernels.unpack(k): self._t[k] for k in sorted(self._t)}

    def __len__(self):
        return len(self._t)

    def __bool__(self):
        return bool(self._t)

    def is_constant(self) -> bool:
        return not self._t or (len(self._t) == 1 and 0 in self._t)

    def constant_term(self) -> int:
        return self._t.get(0, 0)

    def to_int(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.constant_term()

    def variables(self) -> set:
        seen = [0] * len(VARS)
        for k in self._t:
            for i, e in enumerate(kernels.unpack(k)):
                if e:
                    seen[i] = 1
        return {VARS[i] for i, s in enumerate(seen) if s}

    def degree_in(self, v: str):
        if not self._t:
            return MINUS_INFINITY
        i = _INDEX[v]
        return max(kernels.unpack(k)[i] for k in self._t)

    def content(self) -> int:
        return reduce(math.gcd, self._t.values(), 0)

    def x_coefficients(self) -> list:
        """Coefficients of x^0, x^1, ... as polynomials free of x."""
        if not self._t:
            return []
        groups = {}
        for k, c in self._t.items():
            exps = kernels.unpack(k)
            rest = kernels.pack((0,) + exps[1:])
            groups.setdefault(exps[0], {})[rest] = c
        top = max(groups)
        return [Polynomial(groups.get(i, {})) for i in range(top + 1)]

    @classmethod
    def from_x_coefficients(cls, coeffs) -> "Polynomial":
        xk = kernels.pack((1,) + (0,) * (len(VARS) - 1))
        out = {}
        for i, c in enumerate(coeffs):
            for k, v in cls.coerce(c)._t.items():
                out[k + i * xk] = v
        return cls(out)

    # ------------------------------------------------------------- arithmetic

    def __add__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial(kernels.add(self._t, other._t))

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial(kernels.sub(self._t, other._t))

    def __rsub__(self, other):
        try:
            other = Polynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return Polynomial(kernels.sub(other._t, self._t))

    def __neg__(self):
        return Polynomial({k: -c for k, c in self._t.items()})

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return Polynomial(kernels.mul(self._t, other._t))
        try:
            c = _as_int(other)
        except TypeError:
            return NotImplemented
        return Polynomial(kernels.scale(self._t, c))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def exact_div(self, other) -> "Polynomial":
        """Quotient by ``other``; raises ``NonExactDivisionError`` on a remainder."""
        other = Polynomial.coerce(other)
        return Polynomial(kernels.exact_div(self._t, other._t))

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._t == other._t
        try:
            return self._t == Polynomial.const(other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._t.items()))
        return self._hash

    # ----------------------------------------------------------- substitution

    def substitute(self, bindings) -> tuple["Polynomial", int]:
        """Substitute variables; returns ``(numerator, positive int denominator)``.

        Bound values may be ints, Fractions or Polynomials.  Rational values are
        handled by clearing denominators, and the returned pair is reduced so
        that ``gcd(content(numerator), denominator) == 1``.
        """
        if not bindings:
            return self, 1
        idx = {}
        for name, value in bindings.items():
            if name not in _INDEX:
                raise KeyError(f"unknown variable {name!r}")
            if isinstance(value, Polynomial):
                idx[_INDEX[name]] = (value, 1)
            else:
                fr = Fraction(value)
                idx[_INDEX[name]] = (Polynomial.const(fr.numerator), fr.denominator)
        top = {i: 0 for i in idx}
        unpacked = [(kernels.unpack(k), c) for k, c in self._t.items()]
        for exps, _ in unpacked:
            for i in idx:
                top[i] = max(top[i], exps[i])
        den = 1
        for i, (_, d) in idx.items():
            den *= d ** top[i]
        cache = {}

        def power(i, e):
            key = (i, e)
            if key not in cache:
                num, d = idx[i]
                cache[key] = num**e * (d ** (top[i] - e))
            return cache[key]

        out = Polynomial()
        for exps, c in unpacked:
            rest = list(exps)
            factor = Polynomial.const(c)
            for i in idx:
                rest[i] = 0
                factor = factor * power(i, exps[i])
            out = out + factor * Polynomial({kernels.pack(rest): 1})
        g = math.gcd(out.content(), den)
        if g > 1:
            out = Polynomial({k: c // g for k, c in out._t.items()})
            den //= g
        return out, den

    def evaluate(self, values):
        """Evaluate at rational values for every variable present."""
        total = Fraction(0)
        for k, c in self._t.items():
            term = Fraction(c)
            for i, e in enumerate(kernels.unpack(k)):
                if e:
                    term *= Fraction(values[VARS[i]]) ** e
            total += term
        return total

    # ---------------------------------------------------------------- display

    def to_text(self) -> str:
        if not self._t:
            return "0"
        pieces = []
        for k in sorted(self._t):
            c = self._t[k]
            exps = kernels.unpack(k)
            factors = []
            for i in _DISPLAY:
                e = exps[i]
                if e == 1:
                    factors.append(VARS[i])
                elif e:
                    factors.append(f"{VARS[i]}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not pieces:
                pieces.append(body if c > 0 else f"-{body}")
            else:
                pieces.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(pieces)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def to_json(self) -> list:
        return [
            {"coeff": str(self._t[k]), "exps": list(kernels.unpack(k))}
            for k in sorted(self._t)
        ]

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        return cls.from_terms({tuple(d["exps"]): int(d["coeff"]) for d in data})


ZERO = Polynomial()
ONE = Polynomial.const(1)
X, P, Q, A, B, T = (Polynomial.var(v) for v in VARS)


# ------------------------------------------------------------------- parsing

_BINOPS = {
    ast.Add: lambda l, r: l + r,
    ast.Sub: lambda l, r: l - r,
    ast.Mult: lambda l, r: l * r,
}


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z])|(\*\*|[-+*^()]))")


def _explicit(text: str) -> str:
    """Insert the ``*`` implied by juxtaposition, as in ``2t(3-4t^2)x``."""
    out = []
    prev_operand = False
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed polynomial: {text!r}")
        pos = m.end()
        num, name, op = m.groups()
        starts_operand = num is not None or name is not None or op == "("
        if prev_operand and starts_operand:
            out.append("*")
        if name is not None and name not in _INDEX:
            raise ValueError(f"unknown variable {name!r} in {text!r}")
        out.append(num or name or ("**" if op == "^" else op))
        prev_operand = num is not None or name is not None or op == ")"
    return "".join(out)


def parse_poly(text: str) -> Polynomial:
    """Parse an integer polynomial such as ``"(1+x)^2 - 4t^2x"``.

    Accepts ``+ - *``, ``^`` or ``**`` with nonnegative integer exponents,
    integer literals, parentheses, the variables x, p, q, a, b, t, and
    multiplication by juxtaposition.
    """
    src = _explicit(text.replace("−", "-"))
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"malformed polynomial: {text!r}") from exc

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and type(node.value) is int:
            return Polynomial.const(node.value)
        if isinstance(node, ast.Name) and node.id in _INDEX:
            return Polynomial.var(node.id)
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Pow):
                exp = node.right
                if not (isinstance(exp, ast.Constant) and type(exp.value) is int and exp.value >= 0):
                    raise ValueError(f"exponent must be a nonnegative integer in {text!r}")
                return walk(node.left) ** exp.value
            op = _BINOPS.get(type(node.op))
            if op is not None:
                return op(walk(node.left), walk(node.right))
        raise ValueError(f"unsupported syntax in polynomial {text!r}")

    return walk(tree)


# ---------------------------------------------------------- free functions

def poly_add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def mul_sub(f: Polynomial, g: Polynomial, h: Polynomial, k: Polynomial) -> Polynomial:
    """``f*g - h*k`` in one pass (the Bareiss update)."""
    return Polynomial(kernels.mul_sub(f._t, g._t, h._t, k._t))


def poly_exact_div(f: Polynomial, g: Polynomial) -> Polynomial:
    return f.exact_div(g)


def poly_substitute(f: Polynomial, bindings) -> tuple[Polynomial, int]:
    return f.substitute(bindings)


def degree_in(f: Polynomial, v: str):
    return f.degree_in(v)


# -------------------------------------------------------- rational functions

@dataclass(frozen=True)
class RationalFunction:
    """``num/den`` with joint integer content removed and normalized sign.

    The sign makes the constant term of ``den`` positive, or, when that term
    is zero, the first term of ``den`` in canonical order.
    """

    num: Polynomial
    den: Polynomial

    def __post_init__(self):
        num = Polynomial.coerce(self.num)
        den = Polynomial.coerce(self.den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        g = math.gcd(num.content(), den.content())
        lead = den._t.get(0) or den._t[min(den._t)]
        if lead < 0:
            g = -g
        if g != 1:
            num = Polynomial({k: c // g for k, c in num._t.items()})
            den = Polynomial({k: c // g for k, c in den._t.items()})
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def variables(self) -> set:
        return self.num.variables() | self.den.variables()

    def to_text(self) -> str:
        def wrap(f):
            return f.to_text() if len(f) <= 1 else f"({f.to_text()})"

        if self.den == ONE:
            return self.num.to_text()
        return f"{wrap(self.num)} / {wrap(self.den)}"

    def __str__(self):
        return self.to_text()

    def same_function(self, other: "RationalFunction") -> bool:
        """Cross-multiplication equality (no reduction needed)."""
        return self.num * other.den == other.num * self.den


def _dense_x(f: Polynomial) -> list:
    return [Fraction(c.to_int()) for c in f.x_coefficients()]


def _trim(v: list) -> list:
    while v and v[-1] == 0:
        v.pop()
    return v


def _poly_divmod(f: list, g: list) -> tuple[list, list]:
    f = list(f)
    q = [Fraction(0)] * max(len(f) - len(g) + 1, 0)
    lg = g[-1]
    while len(f) >= len(g) and f:
        c = f[-1] / lg
        s = len(f) - len(g)
        q[s] = c
        for i, gi in enumerate(g):
            f[s + i] -= c * gi
        f.pop()
        _trim(f)
    return q, f


def _univariate_gcd(f: list, g: list) -> list:
    f, g = _trim(list(f)), _trim(list(g))
    while g:
        _, r = _poly_divmod(f, g)
        f, g = g, r
    return [c / f[-1] for c in f]


def _clear(num: list, den: list) -> tuple[Polynomial, Polynomial]:
    m = reduce(lambda acc, c: acc * c.denominator // math.gcd(acc, c.denominator), num + den, 1)
    return (
        Polynomial.from_x_coefficients([_as_int(c * m) for c in num]),
        Polynomial.from_x_coefficients([_as_int(c * m) for c in den]),
    )


def ratfun_reduce(rf: RationalFunction) -> RationalFunction:
    """Cancel the polynomial gcd when both parts involve only x.

    Otherwise only joint integer content is removed (already guaranteed by
    the constructor).
    """
    if not rf.variables() <= {"x"} or not rf.num:
        if not rf.num:
            return RationalFunction(ZERO, ONE)
        return RationalFunction(rf.num, rf.den)
    num, den = _dense_x(rf.num), _dense_x(rf.den)
    g = _univariate_gcd(num, den)
    if len(g) > 1:
        num, rn = _poly_divmod(num, g)
        den, rd = _poly_divmod(den, g)
        assert not rn and not rd
    return RationalFunction(*_clear(_trim(num), _trim(den)))


def rf_to_json(rf: RationalFunction) -> dict:
    return {"num": rf.num.to_json(), "den": rf.den.to_json()}


def scalar_text(value) -> str:
    if isinstance(value, Polynomial):
        return value.to_text()
    return rat_str(value)

"""Pure-Python sparse polynomial kernels.

A polynomial is a ``dict`` mapping a packed monomial key to a nonzero ``int``
coefficient.  Each of the six variables gets a ``FIELD_BITS``-wide field with
``x`` in the most significant position, so comparing keys as integers is the
lexicographic monomial order with ``x`` first, and multiplying monomials is
adding keys.  The top bit of every field is a guard bit: it must stay clear,
which lets overflow and divisibility be tested for all fields at once.

``_kernels.pyx`` mirrors this module function for function.
"""

import heapq

from .errors import ExponentOverflowError, NonExactDivisionError

NVARS = 6
FIELD_BITS = 10
MAX_EXP = (1 << (FIELD_BITS - 1)) - 1
FIELD_MASK = (1 << FIELD_BITS) - 1
GUARD = sum(1 << (FIELD_BITS * i + FIELD_BITS - 1) for i in range(NVARS))

IMPL = "python"


def pack(exps):
    key = 0
    for e in exps:
        if e < 0 or e > MAX_EXP:
            raise ExponentOverflowError(f"exponent {e} outside 0..{MAX_EXP}")
        key = (key << FIELD_BITS) | e
    return key


def unpack(key):
    out = [0] * NVARS
    for i in range(NVARS - 1, -1, -1):
        out[i] = key & FIELD_MASK
        key >>= FIELD_BITS
    return tuple(out)


def add(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = dict(f)
    for m, c in g.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def sub(f, g):
    out = dict(f)
    for m, c in g.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def scale(f, c):
    if not c:
        return {}
    return {m: v * c for m, v in f.items()}


def mul(f, g):
    if len(f) < len(g):
        f, g = g, f
    out = {}
    get = out.get
    for mg, cg in g.items():
        for mf, cf in f.items():
            m = mf + mg
            if m & GUARD:
                raise ExponentOverflowError("monomial exponent overflow in product")
            out[m] = get(m, 0) + cf * cg
    return {m: c for m, c in out.items() if c}


def mul_sub(f, g, h, k):
    """Return ``f*g - h*k`` without building the intermediate products."""
    out = {}
    get = out.get
    for mg, cg in g.items():
        for mf, cf in f.items():
            m = mf + mg
            if m & GUARD:
                raise ExponentOverflowError("monomial exponent overflow in product")
            out[m] = get(m, 0) + cf * cg
    for mk, ck in k.items():
        for mh, ch in h.items():
            m = mh + mk
            if m & GUARD:
                raise ExponentOverflowError("monomial exponent overflow in product")
            out[m] = get(m, 0) - ch * ck
    return {m: c for m, c in out.items() if c}


def exact_div(f, g):
    """Quotient of ``f`` by ``g``; raises if ``g`` does not divide ``f``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}
    lg = max(g)
    lc = g[lg]
    if len(g) == 1:
        out = {}
        for m, c in f.items():
            d = (m | GUARD) - lg
            if d & GUARD != GUARD:
                raise NonExactDivisionError("monomial does not divide")
            q, r = divmod(c, lc)
            if r:
                raise NonExactDivisionError("coefficient does not divide")
            out[m - lg] = q
        return out
    rem = dict(f)
    heap = [-m for m in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        m = -heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        d = (m | GUARD) - lg
        if d & GUARD != GUARD:
            raise NonExactDivisionError("leading monomial does not divide")
        q, r = divmod(c, lc)
        if r:
            raise NonExactDivisionError("leading coefficient does not divide")
        qm = m - lg
        quot[qm] = q
        for mg, cg in g.items():
            t = qm + mg
            if t & GUARD:
                raise NonExactDivisionError("quotient term overflows the dividend")
            s = rem.get(t, 0) - q * cg
            if s:
                if t not in rem:
                    heapq.heappush(heap, -t)
                rem[t] = s
            else:
                rem.pop(t, None)
    return quot


def series_div(u, d, n, div0):
    """First ``n`` coefficients of ``u/d`` as a power series.

    ``u`` and ``d`` are coefficient lists (any ring elements); ``div0`` divides
    a ring element by ``d[0]``.
    """
    out = []
    nd = len(d)
    nu = len(u)
    for i in range(n):
        acc = u[i] if i < nu else 0
        for j in range(1, min(i, nd - 1) + 1):
            dj = d[j]
            if dj:
                acc = acc - dj * out[i - j]
        out.append(div0(acc))
    return out

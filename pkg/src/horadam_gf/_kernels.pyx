# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernels; same contract as ``_kernels_py``.

Monomial keys fit in 60 bits, so key arithmetic runs on C integers; the
coefficients stay Python ints.
"""

import heapq

from .errors import ExponentOverflowError, NonExactDivisionError

DEF C_NVARS = 6
DEF C_FIELD_BITS = 10

NVARS = C_NVARS
FIELD_BITS = C_FIELD_BITS
MAX_EXP = (1 << (C_FIELD_BITS - 1)) - 1
FIELD_MASK = (1 << C_FIELD_BITS) - 1
GUARD = sum(1 << (C_FIELD_BITS * i + C_FIELD_BITS - 1) for i in range(C_NVARS))

IMPL = "cython"

cdef unsigned long long C_GUARD = GUARD


def pack(exps):
    cdef unsigned long long key = 0
    cdef long e
    for e in exps:
        if e < 0 or e > MAX_EXP:
            raise ExponentOverflowError(f"exponent {e} outside 0..{MAX_EXP}")
        key = (key << C_FIELD_BITS) | <unsigned long long>e
    return key


def unpack(unsigned long long key):
    cdef int i
    out = [0] * C_NVARS
    for i in range(C_NVARS - 1, -1, -1):
        out[i] = <long>(key & FIELD_MASK)
        key >>= C_FIELD_BITS
    return tuple(out)


def add(dict f, dict g):
    if len(f) < len(g):
        f, g = g, f
    cdef dict out = dict(f)
    for m, c in g.items():
        s = out.get(m, 0) + c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def sub(dict f, dict g):
    cdef dict out = dict(f)
    for m, c in g.items():
        s = out.get(m, 0) - c
        if s:
            out[m] = s
        else:
            out.pop(m, None)
    return out


def scale(dict f, c):
    if not c:
        return {}
    return {m: v * c for m, v in f.items()}


cdef inline void _accumulate(dict out, list fk, list fc, list gk, list gc, bint negate) except *:
    cdef Py_ssize_t i, j, nf = len(fk), ng = len(gk)
    cdef unsigned long long a, m
    for j in range(ng):
        b = <unsigned long long>gk[j]
        cg = gc[j]
        for i in range(nf):
            a = <unsigned long long>fk[i]
            m = a + b
            if m & C_GUARD:
                raise ExponentOverflowError("monomial exponent overflow in product")
            key = m
            prev = out.get(key)
            if negate:
                t = -(fc[i] * cg) if prev is None else prev - fc[i] * cg
            else:
                t = fc[i] * cg if prev is None else prev + fc[i] * cg
            out[key] = t


def mul(dict f, dict g):
    if len(f) < len(g):
        f, g = g, f
    cdef dict out = {}
    _accumulate(out, list(f.keys()), list(f.values()), list(g.keys()), list(g.values()), False)
    return {m: c for m, c in out.items() if c}


def mul_sub(dict f, dict g, dict h, dict k):
    """Return ``f*g - h*k`` without building the intermediate products."""
    cdef dict out = {}
    _accumulate(out, list(f.keys()), list(f.values()), list(g.keys()), list(g.values()), False)
    _accumulate(out, list(h.keys()), list(h.values()), list(k.keys()), list(k.values()), True)
    return {m: c for m, c in out.items() if c}


def exact_div(dict f, dict g):
    """Quotient of ``f`` by ``g``; raises if ``g`` does not divide ``f``."""
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}
    cdef unsigned long long lg = max(g)
    cdef unsigned long long m, d, qm, t
    cdef dict out, rem, quot
    cdef list heap
    lc = g[lg]
    if len(g) == 1:
        out = {}
        for key, c in f.items():
            m = key
            d = (m | C_GUARD) - lg
            if d & C_GUARD != C_GUARD:
                raise NonExactDivisionError("monomial does not divide")
            q, r = divmod(c, lc)
            if r:
                raise NonExactDivisionError("coefficient does not divide")
            out[m - lg] = q
        return out
    cdef list gk = list(g.keys())
    cdef list gc = list(g.values())
    cdef Py_ssize_t j, ng = len(gk)
    rem = dict(f)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    quot = {}
    while rem:
        m = -heapq.heappop(heap)
        c = rem.get(m)
        if c is None:
            continue
        d = (m | C_GUARD) - lg
        if d & C_GUARD != C_GUARD:
            raise NonExactDivisionError("leading monomial does not divide")
        q, r = divmod(c, lc)
        if r:
            raise NonExactDivisionError("leading coefficient does not divide")
        qm = m - lg
        quot[qm] = q
        for j in range(ng):
            t = qm + <unsigned long long>gk[j]
            if t & C_GUARD:
                raise NonExactDivisionError("quotient term overflows the dividend")
            key = t
            prev = rem.get(key)
            s = -(q * gc[j]) if prev is None else prev - q * gc[j]
            if s:
                if prev is None:
                    heapq.heappush(heap, -key)
                rem[key] = s
            else:
                rem.pop(key, None)
    return quot


def series_div(list u, list d, Py_ssize_t n, div0):
    """First ``n`` coefficients of ``u/d`` as a power series."""
    cdef list out = []
    cdef Py_ssize_t i, j, nd = len(d), nu = len(u), top
    for i in range(n):
        acc = u[i] if i < nu else 0
        top = i if i < nd - 1 else nd - 1
        for j in range(1, top + 1):
            dj = d[j]
            if dj:
                acc = acc - dj * out[i - j]
        out.append(div0(acc))
    return out

"""The compiled and pure-Python kernels must agree exactly."""

import importlib
import os
import subprocess
import sys

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from horadam_gf import _kernels_py as pure
from horadam_gf.errors import ExponentOverflowError, NonExactDivisionError

from conftest import polynomials

try:
    compiled = importlib.import_module("horadam_gf._kernels")
except ImportError:  # extension not built
    compiled = None

needs_compiled = pytest.mark.skipif(compiled is None, reason="compiled kernels not built")
backends = [pure] + ([compiled] if compiled is not None else [])


def _impl_with_env(value):
    env = {**os.environ, "HORADAM_GF_PURE": value}
    out = subprocess.run(
        [sys.executable, "-c", "import horadam_gf.kernels as k; print(k.IMPL)"],
        env=env, capture_output=True, text=True, check=True,
    )
    return out.stdout.strip()


def test_backend_selection():
    assert _impl_with_env("1") == "python"
    assert _impl_with_env("0") == ("cython" if compiled is not None else "python")


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.IMPL)
def test_pack_unpack(impl):
    exps = (3, 0, 511, 1, 2, 7)
    assert impl.unpack(impl.pack(exps)) == exps
    assert impl.pack((1, 0, 0, 0, 0, 0)) > impl.pack((0, 9, 9, 9, 9, 9))
    with pytest.raises(ExponentOverflowError):
        impl.pack((512, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.IMPL)
def test_overflow_and_division_errors(impl):
    big = {impl.pack((300, 0, 0, 0, 0, 0)): 1}
    with pytest.raises(ExponentOverflowError):
        impl.mul(big, big)
    x = {impl.pack((1, 0, 0, 0, 0, 0)): 1}
    one = {0: 1}
    with pytest.raises(NonExactDivisionError):
        impl.exact_div(one, x)
    with pytest.raises(NonExactDivisionError):
        impl.exact_div({**x, **{0: 1}}, {**x, **{0: -1}})


@needs_compiled
@given(polynomials(), polynomials(), polynomials(), polynomials())
def test_backends_agree(f, g, h, k):
    f, g, h, k = f._t, g._t, h._t, k._t
    assert compiled.add(f, g) == pure.add(f, g)
    assert compiled.sub(f, g) == pure.sub(f, g)
    assert compiled.mul(f, g) == pure.mul(f, g)
    assert compiled.mul_sub(f, g, h, k) == pure.mul_sub(f, g, h, k)
    assert compiled.scale(f, -3) == pure.scale(f, -3)


@needs_compiled
@given(polynomials(), polynomials())
def test_backends_agree_on_division(f, g):
    assume(g._t)
    prod = pure.mul(f._t, g._t)
    assert compiled.exact_div(prod, g._t) == pure.exact_div(prod, g._t) == f._t


@needs_compiled
@given(st.lists(st.integers(-9, 9), max_size=6), st.lists(st.integers(-9, 9), max_size=5))
def test_backends_agree_on_series(u, tail):
    d = [1] + tail
    assert compiled.series_div(u, d, 12, lambda v: v) == pure.series_div(u, d, 12, lambda v: v)

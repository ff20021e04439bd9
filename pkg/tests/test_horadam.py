from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from horadam_gf.horadam import (
    HoradamParams,
    horadam_seq,
    mixed_series_oracle,
    power_series_oracle,
    preset,
    symbolic_params,
)
from horadam_gf.polyring import Polynomial, T

from conftest import rationals


@pytest.mark.parametrize("name, expected", [
    ("fibonacci", (0, 1, 1, 1)),
    ("lucas", (2, 1, 1, 1)),
    ("pell", (0, 1, 2, 1)),
])
def test_numeric_presets(name, expected):
    params = preset(name)
    assert params.as_tuple() == expected
    assert not params.symbolic


def test_chebyshev_preset_is_symbolic():
    params = preset("chebyshev-u")
    assert params.symbolic
    assert params.as_tuple() == (1, 2 * T, 2 * T, -1)


def test_unknown_preset():
    with pytest.raises(ValueError):
        preset("tribonacci")


def test_sequence_prefixes():
    assert horadam_seq(preset("fibonacci"), 7) == [0, 1, 1, 2, 3, 5, 8]
    assert horadam_seq(preset("lucas"), 6) == [2, 1, 3, 4, 7, 11]
    # w2 = 2*1 + 0, w3 = 2*2 + 1, w4 = 2*5 + 2, w5 = 2*12 + 5
    assert horadam_seq(preset("pell"), 6) == [0, 1, 2, 5, 12, 29]
    assert horadam_seq(preset("pell"), 0) == []


def test_power_series_oracle():
    assert power_series_oracle(preset("fibonacci"), 2, 7) == [0, 1, 1, 4, 9, 25, 64]
    assert power_series_oracle(preset("lucas"), 1, 9) == horadam_seq(preset("lucas"), 9)
    assert power_series_oracle(preset("chebyshev-u"), 1, 3) == [1, 2 * T, 4 * T**2 - 1]
    with pytest.raises(ValueError):
        power_series_oracle(preset("fibonacci"), 0, 3)


def test_mixed_series_oracle():
    # coefficient of x^(n+1) is F_n F_(n+1)
    assert mixed_series_oracle(preset("fibonacci"), 2, 1, 5) == [0, 0, 1, 2, 6, 15]
    assert mixed_series_oracle(preset("lucas"), 2, 1, 3)[1] == 2
    for name in ("fibonacci", "lucas", "pell"):
        assert mixed_series_oracle(preset(name), 3, 2, 4)[0] == 0
    # d = k gives the shifted power series
    fib = horadam_seq(preset("fibonacci"), 8)
    assert mixed_series_oracle(preset("fibonacci"), 3, 3, 6) == [0] + [w**3 for w in fib[1:7]]


params_strategy = st.builds(HoradamParams, rationals, rationals, rationals, rationals)


@given(params_strategy)
def test_recurrence_invariant(params):
    w = horadam_seq(params, 12)
    for n in range(10):
        assert w[n + 2] - params.p * w[n + 1] - params.q * w[n] == 0


def test_recurrence_invariant_symbolic():
    params = symbolic_params()
    w = horadam_seq(params, 8)
    for n in range(6):
        assert w[n + 2] - params.p * w[n + 1] - params.q * w[n] == Polynomial()


@pytest.mark.parametrize("lam", [3, Fraction(-2, 7)])
@pytest.mark.parametrize("name", ["fibonacci", "lucas", "pell"])
def test_homogeneity(name, lam):
    base = preset(name)
    for k in range(1, 5):
        scaled = power_series_oracle(base.scaled(lam), k, 16)
        assert scaled == [lam**k * c for c in power_series_oracle(base, k, 16)]


def test_chebyshev_at_one():
    w = horadam_seq(preset("chebyshev-u"), 21)
    assert [c.substitute({"t": 1}) for c in w] == [(Polynomial.const(n + 1), 1) for n in range(21)]


def test_params_parse_strings():
    params = HoradamParams("1/2", "-3", "2", "0")
    assert params.as_tuple() == (Fraction(1, 2), -3, 2, 0)
    params = HoradamParams("1", "b", "2t", "-1")
    assert params.symbolic
    assert params.b == Polynomial.var("b") and params.p == 2 * T and params.q == -1


def test_symbolic_with_non_integer_constant_rejected():
    with pytest.raises(TypeError):
        HoradamParams("1/2", "b", "p", "q")

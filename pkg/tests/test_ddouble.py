import mpmath
import numpy as np
from hypothesis import given, settings, strategies as st

from critsqueeze.ddouble import DD, dd_hypot, dd_sincos, dd_sqrt

finite = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False).filter(lambda x: abs(x) > 1e-6)


def mp_of(d: DD, i=()):
    return mpmath.mpf(float(d.hi[i])) + mpmath.mpf(float(d.lo[i]))


def rel(a, b):
    return abs(a - b) / abs(b)


@given(finite, finite, finite)
def test_mul_add_error_is_double_double(a, b, c):
    with mpmath.workdps(50):
        x = DD(a) * b + c
        exact = mpmath.mpf(a) * mpmath.mpf(b) + mpmath.mpf(c)
        if exact != 0:
            assert abs(mp_of(x) - exact) <= 1e-30 * (abs(mpmath.mpf(a) * b) + abs(c))


@given(st.floats(1e-10, 1e10))
def test_sqrt(a):
    with mpmath.workdps(50):
        assert rel(mp_of(dd_sqrt(DD(a))), mpmath.sqrt(a)) < 1e-30


def test_hypot_and_sub():
    with mpmath.workdps(50):
        h = dd_hypot(DD(3.0), DD(4.0))
        assert abs(mp_of(h) - 5) < 1e-30
        tiny = DD(1.0) + 1e-20 - 1.0
        assert rel(mp_of(tiny), mpmath.mpf(1e-20)) < 1e-12


@settings(max_examples=50)
@given(st.floats(-1e5, 1e5))
def test_sincos_against_mpmath(x):
    with mpmath.workdps(50):
        d = DD.from_mpf(mpmath.mpf(x) * mpmath.pi / 7)
        s, c = dd_sincos(d)
        arg = mp_of(d)
        assert abs(mp_of(s) - mpmath.sin(arg)) < 1e-28
        assert abs(mp_of(c) - mpmath.cos(arg)) < 1e-28


def test_vectorized_shapes():
    d = DD(np.linspace(0, 10, 11))
    s, c = dd_sincos(d * 1.5)
    assert s.shape == (11,)
    np.testing.assert_allclose((s * s + c * c).to_float(), 1.0, atol=1e-15)
    assert d[3].to_float() == 3.0
    assert float(DD(2.0) - DD(0.5)) == 1.5

"""Vectorized double-double arithmetic on numpy arrays.

A value is the unevaluated sum hi + lo of two float64 arrays with
|lo| <= ulp(hi)/2, giving about 32 significant decimal digits.  Only the
operations needed by the Dicke extended-precision path are provided:
add, sub, mul, sqrt and sin/cos.  Constants are imported from mpmath.
"""
from __future__ import annotations

import mpmath
import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1


def _two_sum(a, b):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a, b):
    s = a + b
    return s, b - (s - a)


def _split(a):
    c = _SPLIT * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


class DD:
    __slots__ = ("hi", "lo")
    __array_priority__ = 1000  # make ndarray * DD defer to DD.__rmul__

    def __init__(self, hi, lo=0.0):
        self.hi = np.asarray(hi, dtype=float)
        self.lo = np.broadcast_to(np.asarray(lo, dtype=float), self.hi.shape).copy()

    @classmethod
    def from_mpf(cls, x) -> "DD":
        hi = float(x)
        return cls(hi, float(x - hi))

    @classmethod
    def _wrap(cls, other) -> "DD":
        return other if isinstance(other, DD) else cls(other)

    def __float__(self):
        return float(self.hi + self.lo)

    def to_float(self):
        return self.hi + self.lo

    def __neg__(self):
        return DD(-self.hi, -self.lo)

    def __add__(self, other):
        o = DD._wrap(other)
        s, e = _two_sum(self.hi, o.hi)
        t, f = _two_sum(self.lo, o.lo)
        e = e + t
        s, e = _quick_two_sum(s, e)
        e = e + f
        return DD(*_quick_two_sum(s, e))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-DD._wrap(other))

    def __rsub__(self, other):
        return DD._wrap(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, DD):
            p, e = _two_prod(self.hi, other.hi)
            e = e + (self.hi * other.lo + self.lo * other.hi)
        else:
            b = np.asarray(other, dtype=float)
            p, e = _two_prod(self.hi, b)
            e = e + self.lo * b
        return DD(*_quick_two_sum(p, e))

    __rmul__ = __mul__

    def square(self):
        return self * self

    def __getitem__(self, idx):
        return DD(self.hi[idx], self.lo[idx])

    @property
    def shape(self):
        return self.hi.shape


def dd_sqrt(a: DD) -> DD:
    """One Newton correction on top of the float64 square root."""
    q = np.sqrt(np.maximum(a.hi, 0.0))
    safe = np.where(q > 0, q, 1.0)
    p, e = _two_prod(q, q)
    corr = (((a.hi - p) - e) + a.lo) / (2.0 * safe)
    corr = np.where(q > 0, corr, 0.0)
    return DD(*_quick_two_sum(q, corr))


def dd_hypot(a: DD, b: DD) -> DD:
    return dd_sqrt(a * a + b * b)


def _mp_dd(x):
    return DD.from_mpf(x)


with mpmath.workdps(60):
    _HALF_PI = mpmath.pi / 2
    _HP1 = float(_HALF_PI)
    _HP2 = float(_HALF_PI - _HP1)
    _HP3 = float(_HALF_PI - _HP1 - _HP2)
    # 1/n! as (hi, lo) pairs for n = 0..30
    _INV_FACT = []
    for _n in range(31):
        _v = 1 / mpmath.factorial(_n)
        _h = float(_v)
        _INV_FACT.append((_h, float(_v - _h)))

_SIN_TERMS = 14
_COS_TERMS = 15


def dd_sincos(x: DD) -> tuple[DD, DD]:
    """sin and cos of a double-double array.

    Reduction x = r + k*pi/2 uses a three-part pi/2; |r| <= pi/4 is then
    summed by Horner's rule in r**2.
    """
    k = np.rint(x.hi / _HP1)
    p1, e1 = _two_prod(k, _HP1)
    r = (x - DD(p1, e1)) - DD(*_two_prod(k, _HP2)) - k * _HP3
    r2 = r * r
    s = DD(_sign(_SIN_TERMS - 1) * _INV_FACT[2 * _SIN_TERMS - 1][0],
           _sign(_SIN_TERMS - 1) * _INV_FACT[2 * _SIN_TERMS - 1][1])
    for j in range(_SIN_TERMS - 2, -1, -1):
        hi, lo = _INV_FACT[2 * j + 1]
        s = s * r2 + DD(_sign(j) * hi, _sign(j) * lo)
    s = s * r
    c = DD(_sign(_COS_TERMS - 1) * _INV_FACT[2 * _COS_TERMS - 2][0],
           _sign(_COS_TERMS - 1) * _INV_FACT[2 * _COS_TERMS - 2][1])
    for j in range(_COS_TERMS - 2, -1, -1):
        hi, lo = _INV_FACT[2 * j]
        c = c * r2 + DD(_sign(j) * hi, _sign(j) * lo)
    q = np.mod(k, 4).astype(int)
    sin_hi = np.choose(q, [s.hi, c.hi, -s.hi, -c.hi])
    sin_lo = np.choose(q, [s.lo, c.lo, -s.lo, -c.lo])
    cos_hi = np.choose(q, [c.hi, -s.hi, -c.hi, s.hi])
    cos_lo = np.choose(q, [c.lo, -s.lo, -c.lo, s.lo])
    return DD(sin_hi, sin_lo), DD(cos_hi, cos_lo)


def _sign(j):
    return -1.0 if j % 2 else 1.0

"""Vectorised double-double arithmetic on numpy float64 arrays.

A double-double number is an unevaluated sum ``hi + lo`` with
``|lo| <= ulp(hi)/2``, giving roughly 106 bits of significand.  Only the
handful of kernels needed by the series evaluator live here; all of them
are error-free transformations built from IEEE round-to-nearest
operations (Dekker / Knuth), so they work on any numpy without FMA.

Complex double-doubles are carried as four real arrays
``(re_hi, re_lo, im_hi, im_lo)``.
"""

from __future__ import annotations

import numpy as np

_SPLITTER = 134217729.0  # 2**27 + 1

#: unit roundoff of double-double arithmetic
EPS_DD = 2.0**-104


def two_sum(a, b):
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def quick_two_sum(a, b):
    # requires |a| >= |b|
    s = a + b
    err = b - (s - a)
    return s, err


def _split(a):
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def two_prod(a, b):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    err = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, err


def add(ah, al, bh, bl):
    s, e = two_sum(ah, bh)
    t, f = two_sum(al, bl)
    e = e + t
    s, e = quick_two_sum(s, e)
    e = e + f
    return quick_two_sum(s, e)


def sub(ah, al, bh, bl):
    return add(ah, al, -bh, -bl)


def mul(ah, al, bh, bl):
    p, e = two_prod(ah, bh)
    e = e + (ah * bl + al * bh)
    return quick_two_sum(p, e)


def cmul(a, b):
    """Product of two complex double-doubles given as 4-tuples."""
    arh, arl, aih, ail = a
    brh, brl, bih, bil = b
    rr = mul(arh, arl, brh, brl)
    ii = mul(aih, ail, bih, bil)
    ri = mul(arh, arl, bih, bil)
    ir = mul(aih, ail, brh, brl)
    re = sub(*rr, *ii)
    im = add(*ri, *ir)
    return re[0], re[1], im[0], im[1]


def cadd(a, b):
    re = add(a[0], a[1], b[0], b[1])
    im = add(a[2], a[3], b[2], b[3])
    return re[0], re[1], im[0], im[1]


def csub(a, b):
    return cadd(a, (-b[0], -b[1], -b[2], -b[3]))


def cscale(a, sh, sl):
    """Multiply complex double-double ``a`` by the real double-double ``sh + sl``."""
    re = mul(a[0], a[1], sh, sl)
    im = mul(a[2], a[3], sh, sl)
    return re[0], re[1], im[0], im[1]


def from_complex(z) -> tuple:
    z = np.asarray(z, dtype=complex)
    zero = np.zeros(z.shape)
    return z.real.copy(), zero, z.imag.copy(), zero.copy()


def to_complex(a) -> np.ndarray:
    return (a[0] + a[1]) + 1j * (a[2] + a[3])

"""Chord diagrams, circle graphs and vertex minors with exact arithmetic.

Circle points are passed as strings ("1/3") or fractions.Fraction values.
"""

from fractions import Fraction

from . import _core
from ._core import *  # noqa: F401,F403


def _pt(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def cyclic_between(a, b, c):
    return _core.cyclic_between(_pt(a), _pt(b), _pt(c))


def interleaves(p, q):
    return _core.interleaves(_pt(p[0]), _pt(p[1]), _pt(q[0]), _pt(q[1]))


def insert_between(a, b):
    return Fraction(_core.insert_between(_pt(a), _pt(b)))

"""Bases written out by hand for G(3) and F(4), in the package's coordinates."""

from fractions import Fraction as Q

h = Q(1, 2)


def g3(e1=0, e2=0, e3=0, d=0):
    # model coordinates (e1, e2, d) with e1 + e2 + e3 = 0
    return (Q(e1 - e3), Q(e2 - e3), Q(d))


def f4(e1=0, e2=0, e3=0, d=0):
    return (Q(e1), Q(e2), Q(e3), Q(d))


def half(e1, e2, e3, d):
    return f4(h * e1, h * e2, h * e3, h * d)


D21A_BASE = [(1, -1, -1), (0, 2, 0), (0, 0, 2)]

G3_BASES = {
    "S1": [g3(e2=1), g3(e3=1, e2=-1), g3(d=1, e1=1)],
    "S2": [g3(d=1, e3=-1), g3(e3=1, e2=-1), g3(d=-1, e1=-1)],
    "S3": [g3(d=-1, e3=1), g3(d=1, e2=-1), g3(e2=1)],
    "S4": [g3(e3=1, e2=-1), g3(d=-1, e2=1), g3(d=1)],
}

F4_BASES = {
    "S1": [half(1, 1, 1, 1), f4(1, -1), f4(0, 1, -1), f4(-1)],
    "S2": [half(-1, -1, -1, -1), f4(1, -1), f4(0, 1, -1), half(-1, 1, 1, 1)],
    "S3": [f4(-1), half(1, -1, 1, 1), f4(0, 1, -1), half(1, -1, -1, -1)],
    "S4": [half(-1, -1, 1, 1), half(-1, 1, -1, -1), half(1, 1, -1, 1), f4(1, -1)],
    "S5": [half(1, 1, -1, -1), f4(-1), f4(d=1), f4(1, -1)],
    "S6": [f4(d=1), f4(0, 1, -1), half(-1, -1, 1, -1), f4(1, -1)],
}

"""Commutators over an arbitrary product."""

from .scalar import qpow


def _default_mul(a, b):
    return a * b


def commutator(a, b, mul=_default_mul):
    """[a, b] = ab - ba."""
    return mul(a, b) - mul(b, a)


def qcommutator(a, b, c=None, mul=_default_mul):
    """[a, b]_c = c ab - c^-1 ba; ``c`` defaults to q."""
    if c is None:
        c = qpow(1)
    return mul(a, b).scaled(c) - mul(b, a).scaled(c.inverse())

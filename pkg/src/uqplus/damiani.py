"""Root vectors of U_q^+ and the alternating words inside (V, *)."""

from enum import IntEnum

from .brackets import commutator
from .free import FreeElement, X, Y
from .scalar import ONE, q, qpow, q_integer


class AlternatingKind(IntEnum):
    Wminus = 0
    Wplus = 1
    G = 2
    Gtilde = 3


def xi():
    """The constant -q^2 (q - q^-1)^-2."""
    return -(qpow(2)) / (q - qpow(-1)) ** 2


def e_delta_zero():
    """E_{0 delta} = -(q - q^-1)^-1, as a scalar."""
    return -(q - qpow(-1)).inverse()


def e_delta_1():
    return (Y * X).scaled(qpow(-2)) - X * Y


def alternating_word(kind, k):
    if k < 0:
        raise ValueError("index must be nonnegative")
    kind = AlternatingKind(kind)
    if kind is AlternatingKind.Wminus:
        w = "x" + "yx" * k
    elif kind is AlternatingKind.Wplus:
        w = "y" + "xy" * k
    elif kind is AlternatingKind.G:
        w = "yx" * k
    else:
        w = "xy" * k
    return FreeElement.word(w)


class DamianiCache:
    """Memoized E_{n delta + alpha0}, E_{n delta + alpha1}, E_{n delta}.

    ``mul`` is the product used by the recursions; the shuffle product by
    default.
    """

    def __init__(self, mul=None):
        self.mul = mul or (lambda a, b: a * b)
        self.e_minus = [X]
        self.e_plus = [Y]
        self.e_delta = [FreeElement.scalar(e_delta_zero())]
        self._alt_delta = {}
        self._bracket = q_integer(2).inverse()

    def minus(self, n):
        while len(self.e_minus) <= n:
            prev = self.e_minus[-1]
            nxt = commutator(self.delta(1), prev, self.mul).scaled(self._bracket)
            self.e_minus.append(nxt)
        return self.e_minus[n]

    def plus(self, n):
        while len(self.e_plus) <= n:
            prev = self.e_plus[-1]
            nxt = commutator(prev, self.delta(1), self.mul).scaled(self._bracket)
            self.e_plus.append(nxt)
        return self.e_plus[n]

    def delta(self, n):
        if n < 0:
            raise ValueError("index must be nonnegative")
        while len(self.e_delta) <= n:
            m = len(self.e_delta)
            if m == 1:
                self.e_delta.append(
                    self.mul(Y, X).scaled(qpow(-2)) - self.mul(X, Y))
                continue
            ep = self.plus(m - 1)
            val = self.mul(ep, X).scaled(qpow(-2)) - self.mul(X, ep)
            self.e_delta.append(val)
        return self.e_delta[n]

    def delta_alternative(self, n):
        """E_{n delta} from the mirror recursion q^-2 W1 E_{..+a0} - E_{..+a0} W1."""
        if n < 1:
            raise ValueError("E_{n delta} needs n >= 1")
        if n not in self._alt_delta:
            em = self.minus(n - 1)
            self._alt_delta[n] = self.mul(Y, em).scaled(qpow(-2)) - self.mul(em, Y)
        return self._alt_delta[n]


_default = None


def default_cache():
    global _default
    if _default is None:
        _default = DamianiCache()
    return _default


def reset_cache():
    global _default
    _default = None


def damiani_e_minus(n):
    if n < 0:
        raise ValueError("index must be nonnegative")
    return default_cache().minus(n)


def damiani_e_plus(n):
    if n < 0:
        raise ValueError("index must be nonnegative")
    return default_cache().plus(n)


def damiani_e_delta(n):
    if n < 1:
        raise ValueError("E_{n delta} is a scalar at n = 0; use e_delta_zero()")
    return default_cache().delta(n)

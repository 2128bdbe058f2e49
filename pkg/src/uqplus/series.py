"""Truncated formal power series in t, and in two commuting variables s, t.

Coefficients may live in any ring of the package (Scalar, FreeElement,
ModelElement, NormalForm).  Scalars act centrally.  The product of two
coefficients is ``a * b`` unless a ``mul`` function is supplied, which keeps
the left factor's coefficient on the left.
"""

from .scalar import ONE, ZERO, Scalar, to_scalar


def _default_mul(a, b):
    return a * b


def zero_like(c):
    if isinstance(c, Scalar):
        return ZERO
    return type(c).zero()


def one_like(c):
    if isinstance(c, Scalar):
        return ONE
    return type(c).one()


def is_zero(c):
    return c.is_zero()


def _scale(c, s):
    if s.is_one():
        return c
    if isinstance(c, Scalar):
        return c * s
    return c.scaled(s)


class Series1:
    """``sum_{n <= N} a_n t^n``; ``N`` is the truncation degree."""

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs, N=None):
        coeffs = list(coeffs)
        if not coeffs:
            raise ValueError("a series needs at least its constant term")
        if N is None:
            N = len(coeffs) - 1
        zero = zero_like(coeffs[0])
        coeffs = coeffs[:N + 1]
        coeffs += [zero] * (N + 1 - len(coeffs))
        self.coeffs = coeffs
        self.N = N

    @classmethod
    def from_function(cls, fn, N):
        return cls([fn(n) for n in range(N + 1)], N)

    @classmethod
    def constant(cls, c, N):
        return cls([c], N)

    def __getitem__(self, n):
        return self.coeffs[n]

    def zero_coeff(self):
        return zero_like(self.coeffs[0])

    def truncate(self, N):
        return Series1(self.coeffs[:N + 1], min(N, self.N))

    def _binary(self, other, op):
        if not isinstance(other, Series1):
            other = Series1.constant(other, self.N)
        N = min(self.N, other.N)
        return Series1([op(self.coeffs[n], other.coeffs[n]) for n in range(N + 1)], N)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return Series1([-c for c in self.coeffs], self.N)

    def scaled(self, s):
        s = to_scalar(s)
        return Series1([_scale(c, s) for c in self.coeffs], self.N)

    def mul(self, other, mul=_default_mul):
        """Cauchy product ``c_n = sum_i a_i b_{n-i}``."""
        N = min(self.N, other.N)
        out = []
        for n in range(N + 1):
            acc = None
            for i in range(n + 1):
                a, b = self.coeffs[i], other.coeffs[n - i]
                if a.is_zero() or b.is_zero():
                    continue
                term = mul(a, b)
                acc = term if acc is None else acc + term
            out.append(self.zero_coeff() if acc is None else acc)
        return Series1(out, N)

    def __mul__(self, other):
        if isinstance(other, Series1):
            return self.mul(other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def inverse(self, mul=_default_mul, inv0=None):
        """``b_0 = a_0^-1`` and ``b_n = -a_0^-1 sum_{k=1}^n a_k b_{n-k}``.

        ``inv0`` is the inverse of a non-scalar constant term; otherwise the
        constant term must be a nonzero scalar (times the unit).
        """
        a0 = self.coeffs[0]
        if inv0 is None:
            inv0 = _scalar_inverse(a0)
        b = [inv0]
        for n in range(1, self.N + 1):
            acc = None
            for k in range(1, n + 1):
                a = self.coeffs[k]
                if a.is_zero() or b[n - k].is_zero():
                    continue
                term = mul(a, b[n - k])
                acc = term if acc is None else acc + term
            if acc is None:
                b.append(self.zero_coeff())
            else:
                b.append(-mul(inv0, acc))
        return Series1(b, self.N)

    def scale_arg(self, c):
        """``a(c t)``: coefficient n multiplied by ``c**n``."""
        c = to_scalar(c)
        out = []
        power = ONE
        for coeff in self.coeffs:
            out.append(_scale(coeff, power))
            power = power * c
        return Series1(out, self.N)

    def shift_down(self):
        """``t^-1 a(t)``; the constant term has to vanish."""
        if not self.coeffs[0].is_zero():
            raise ValueError("t^-1 a(t) needs a zero constant term")
        if self.N == 0:
            raise ValueError("nothing left after dividing by t")
        return Series1(self.coeffs[1:], self.N - 1)

    def shift_up(self):
        """``t a(t)``; the truncation degree grows by one."""
        return Series1([self.zero_coeff()] + self.coeffs, self.N + 1)

    def map(self, fn):
        return Series1([fn(c) for c in self.coeffs], self.N)

    def is_zero(self):
        return all(c.is_zero() for c in self.coeffs)

    def first_nonzero(self):
        """``(n, a_n)`` for the lowest nonzero coefficient, or None."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                return n, c
        return None

    def difference(self, other):
        """First coordinate where two series differ, or None."""
        hit = (self - other).first_nonzero()
        if hit is None:
            return None
        n, c = hit
        return (n,) + _first_term(c)

    def __eq__(self, other):
        if not isinstance(other, Series1):
            return NotImplemented
        return (self - other).is_zero()

    __hash__ = None

    def __str__(self):
        parts = []
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                parts.append(f"[{c}]*t^{n}")
        return (" + ".join(parts) or "0") + f" + O(t^{self.N + 1})"

    def __repr__(self):
        return f"Series1({self})"


def _scalar_inverse(a0):
    if isinstance(a0, Scalar):
        if a0.is_zero():
            raise ZeroDivisionError("constant term is not invertible")
        return a0.inverse()
    if a0.is_zero() or not a0.is_scalar():
        raise ZeroDivisionError("constant term is not an invertible scalar")
    return type(a0).one().scaled(a0.constant_term().inverse())


def _first_term(c):
    if isinstance(c, Scalar):
        return (None, c)
    hit = c.first_term()
    if hit is None:
        return (None, None)
    key, coeff = hit
    fmt = getattr(c, "format_key", None)
    return (fmt(key) if fmt else key, coeff)


class Series2:
    """``sum_{i + j <= N} a_{ij} s^i t^j`` with s, t commuting."""

    __slots__ = ("coeffs", "N", "_zero")

    def __init__(self, coeffs, N, zero):
        self.N = N
        self._zero = zero
        self.coeffs = {k: v for k, v in coeffs.items()
                       if k[0] + k[1] <= N and not v.is_zero()}

    def __getitem__(self, ij):
        return self.coeffs.get(ij, self._zero)

    @classmethod
    def in_s(cls, a):
        return cls({(i, 0): c for i, c in enumerate(a.coeffs)}, a.N, a.zero_coeff())

    @classmethod
    def in_t(cls, a):
        return cls({(0, j): c for j, c in enumerate(a.coeffs)}, a.N, a.zero_coeff())

    @classmethod
    def polynomial(cls, terms, N, unit):
        """``sum c_{ij} s^i t^j`` times ``unit`` for a dict of scalars."""
        out = {}
        for (i, j), c in terms.items():
            c = to_scalar(c)
            if not c.is_zero():
                out[(i, j)] = _scale(unit, c)
        return cls(out, N, zero_like(unit))

    def _binary(self, other, op):
        N = min(self.N, other.N)
        keys = set(self.coeffs) | set(other.coeffs)
        return Series2({k: op(self[k], other[k]) for k in keys}, N, self._zero)

    def __add__(self, other):
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self):
        return Series2({k: -v for k, v in self.coeffs.items()}, self.N, self._zero)

    def scaled(self, s):
        s = to_scalar(s)
        return Series2({k: _scale(v, s) for k, v in self.coeffs.items()}, self.N, self._zero)

    def mul(self, other, mul=_default_mul):
        N = min(self.N, other.N)
        out = {}
        for (i, j), a in self.coeffs.items():
            for (k, l), b in other.coeffs.items():
                if i + j + k + l > N:
                    continue
                term = mul(a, b)
                key = (i + k, j + l)
                out[key] = out[key] + term if key in out else term
        return Series2(out, N, self._zero)

    def __mul__(self, other):
        if isinstance(other, Series2):
            return self.mul(other)
        return self.scaled(other)

    def __rmul__(self, other):
        return self.scaled(other)

    def times_poly(self, terms):
        """Multiply by the scalar polynomial ``sum c_{ab} s^a t^b``."""
        out = {}
        for (a, b), c in terms.items():
            c = to_scalar(c)
            for (i, j), v in self.coeffs.items():
                key = (i + a, j + b)
                term = _scale(v, c)
                out[key] = out[key] + term if key in out else term
        return Series2(out, self.N, self._zero)

    def scale_args(self, cs=ONE, ct=ONE):
        cs, ct = to_scalar(cs), to_scalar(ct)
        return Series2({(i, j): _scale(v, cs ** i * ct ** j)
                        for (i, j), v in self.coeffs.items()}, self.N, self._zero)

    def truncate(self, N):
        return Series2(self.coeffs, min(N, self.N), self._zero)

    def is_zero(self):
        return all(v.is_zero() for v in self.coeffs.values())

    def first_nonzero(self):
        for k in sorted(self.coeffs, key=lambda ij: (ij[0] + ij[1], ij)):
            if not self.coeffs[k].is_zero():
                return k, self.coeffs[k]
        return None

    def difference(self, other):
        hit = (self - other).first_nonzero()
        if hit is None:
            return None
        k, c = hit
        return (k,) + _first_term(c)

    def __str__(self):
        parts = [f"[{v}]*s^{i}*t^{j}" for (i, j), v in sorted(self.coeffs.items())]
        return (" + ".join(parts) or "0") + f" + O(deg {self.N + 1})"


def series_mul(a, b, mul=_default_mul):
    return a.mul(b, mul)


def series_inverse(a, mul=_default_mul):
    return a.inverse(mul)


def series_scale_arg(a, c):
    return a.scale_arg(c)


def shift_down(a):
    return a.shift_down()


def divided_difference(a):
    """``(a(s) - a(t)) / (s - t)``: coefficient of s^i t^j is a_{i+j+1}."""
    N = a.N - 1
    if N < 0:
        return Series2({}, 0, a.zero_coeff())
    out = {}
    for i in range(N + 1):
        for j in range(N + 1 - i):
            out[(i, j)] = a.coeffs[i + j + 1]
    return Series2(out, N, a.zero_coeff())


def series2_check_zero(a):
    return a.is_zero()

"""Exact arithmetic in the field Q(q).

A ``LaurentPoly`` is ``q**shift * p(q)`` with ``p`` an integer polynomial
(``flint.fmpz_poly``) whose constant term is nonzero.  A ``Scalar`` is a
reduced fraction ``q**e * n(q) / d(q)`` where ``n``, ``d`` are coprime in
``Z[q]``, neither vanishes at 0, and ``d`` has positive leading coefficient.
Those rules make the representation unique, so equality is structural.
"""

from fractions import Fraction

from flint import fmpz_poly

from ._text import ParseError, TokenStream

_ZERO = fmpz_poly([])
_ONE = fmpz_poly([1])


def _valuation(p):
    """Index of the lowest nonzero coefficient of a nonzero polynomial."""
    if p[0] != 0:
        return 0
    coeffs = p.coeffs()
    for i, c in enumerate(coeffs):
        if c != 0:
            return i
    raise ValueError("valuation of zero polynomial")


def _strip(p, shift):
    """Normalize ``q**shift * p`` so that ``p(0) != 0``."""
    if p.is_zero():
        return _ZERO, 0
    v = _valuation(p)
    if v:
        return p.right_shift(v), shift + v
    return p, shift


class LaurentPoly:
    __slots__ = ("poly", "shift", "_hash")

    def __init__(self, poly=None, shift=0):
        if poly is None:
            poly = _ZERO
        elif isinstance(poly, int):
            poly = fmpz_poly([poly])
        self.poly, self.shift = _strip(poly, shift)
        self._hash = None

    @classmethod
    def _raw(cls, poly, shift):
        obj = cls.__new__(cls)
        obj.poly = poly
        obj.shift = shift
        obj._hash = None
        return obj

    @classmethod
    def from_dict(cls, terms):
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return cls()
        lo = min(terms)
        coeffs = [0] * (max(terms) - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = c
        return cls._raw(fmpz_poly(coeffs), lo)

    @classmethod
    def monomial(cls, exponent, coeff=1):
        if coeff == 0:
            return cls()
        return cls._raw(fmpz_poly([coeff]), exponent)

    def terms(self):
        """Dictionary ``exponent -> integer coefficient``."""
        return {
            self.shift + i: int(c) for i, c in enumerate(self.poly.coeffs()) if c != 0
        }

    def is_zero(self):
        return self.poly.is_zero()

    def valuation(self):
        return self.shift

    def degree(self):
        return self.shift + self.poly.degree()

    def _align(self, other):
        m = min(self.shift, other.shift)
        a = self.poly.left_shift(self.shift - m) if self.shift != m else self.poly
        b = other.poly.left_shift(other.shift - m) if other.shift != m else other.poly
        return a, b, m

    def __add__(self, other):
        if not isinstance(other, LaurentPoly):
            if isinstance(other, int):
                other = LaurentPoly(other)
            else:
                return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b, m = self._align(other)
        return LaurentPoly(a + b, m)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(-self.poly, self.shift)

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            return LaurentPoly._raw(self.poly * other, self.shift)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        return LaurentPoly._raw(self.poly * other.poly, self.shift + other.shift)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a Laurent polynomial")
        return LaurentPoly._raw(self.poly ** n, self.shift * n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.shift == other.shift and self.poly == other.poly

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shift, tuple(int(c) for c in self.poly.coeffs())))
        return self._hash

    def __str__(self):
        return _format_laurent(self.terms())

    def __repr__(self):
        return f"LaurentPoly({self})"


def _format_laurent(terms):
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        if e == 0:
            body = str(abs(c))
        else:
            mono = "q" if e == 1 else f"q^{e}"
            body = mono if abs(c) == 1 else f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


class Scalar:
    """An element of Q(q) in canonical reduced form."""

    __slots__ = ("num", "exp", "den", "_hash")

    def __init__(self, value=0, den=None):
        if isinstance(value, Scalar) and den is None:
            self.num, self.exp, self.den = value.num, value.exp, value.den
            self._hash = None
            return
        n, e, d = _coerce_parts(value)
        if den is not None:
            n2, e2, d2 = _coerce_parts(den)
            if n2.is_zero():
                raise ZeroDivisionError("zero denominator")
            n, e, d = n * d2, e - e2, d * n2
        self._set(n, e, d)

    def _set(self, n, e, d):
        if n.is_zero():
            self.num, self.exp, self.den = _ZERO, 0, _ONE
            self._hash = None
            return
        n, e = _strip(n, e)
        d, e2 = _strip(d, 0)
        e -= e2
        if not d.is_one():
            g = n.gcd(d)
            if not g.is_one():
                n = n // g
                d = d // g
            if d.leading_coefficient() < 0:
                n, d = -n, -d
        self.num, self.exp, self.den = n, e, d
        self._hash = None

    @classmethod
    def _make(cls, n, e, d):
        obj = cls.__new__(cls)
        obj._set(n, e, d)
        return obj

    @classmethod
    def _poly(cls, n, e):
        # caller guarantees n(0) != 0 or n == 0
        obj = cls.__new__(cls)
        if n.is_zero():
            obj.num, obj.exp = _ZERO, 0
        else:
            obj.num, obj.exp = n, e
        obj.den = _ONE
        obj._hash = None
        return obj

    @classmethod
    def from_laurent(cls, lp):
        return cls._poly(lp.poly, lp.shift)

    @property
    def numerator(self):
        return LaurentPoly._raw(self.num, self.exp)

    @property
    def denominator(self):
        return LaurentPoly._raw(self.den, 0)

    def is_zero(self):
        return self.num.is_zero()

    def is_one(self):
        return self.exp == 0 and self.num.is_one() and self.den.is_one()

    def is_laurent(self):
        return self.den.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, LaurentPoly, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        m = min(self.exp, other.exp)
        a = self.num.left_shift(self.exp - m) if self.exp != m else self.num
        b = other.num.left_shift(other.exp - m) if other.exp != m else other.num
        if self.den.is_one() and other.den.is_one():
            s = a + b
            if s.is_zero():
                return ZERO
            s, m = _strip(s, m)
            return Scalar._poly(s, m)
        if self.den == other.den:
            return Scalar._make(a + b, m, self.den)
        g = self.den.gcd(other.den)
        da = self.den // g
        db = other.den // g
        return Scalar._make(a * db + b * da, m, da * other.den)

    __radd__ = __add__

    def __neg__(self):
        obj = Scalar.__new__(Scalar)
        obj.num, obj.exp, obj.den, obj._hash = -self.num, self.exp, self.den, None
        return obj

    def __sub__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, LaurentPoly, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, LaurentPoly, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        if self.num.is_zero() or other.num.is_zero():
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return Scalar._poly(self.num * other.num, self.exp + other.exp)
        return Scalar._make(self.num * other.num, self.exp + other.exp, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(q)")
        n, d = self.den, self.num
        if d.leading_coefficient() < 0:
            n, d = -n, -d
        obj = Scalar.__new__(Scalar)
        obj.num, obj.exp, obj.den, obj._hash = n, -self.exp, d, None
        return obj

    def __truediv__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, LaurentPoly, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return Scalar(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if n == 0:
            return ONE
        if self.den.is_one():
            return Scalar._poly(self.num ** n, self.exp * n)
        obj = Scalar.__new__(Scalar)
        obj.num, obj.exp, obj.den, obj._hash = self.num ** n, self.exp * n, self.den ** n, None
        return obj

    def __eq__(self, other):
        if not isinstance(other, Scalar):
            if isinstance(other, (int, LaurentPoly, Fraction)):
                other = Scalar(other)
            else:
                return NotImplemented
        return self.exp == other.exp and self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (
                    self.exp,
                    tuple(int(c) for c in self.num.coeffs()),
                    tuple(int(c) for c in self.den.coeffs()),
                )
            )
        return self._hash

    def numerator_terms(self):
        return self.numerator.terms()

    def evaluate(self, value):
        """Evaluate at a rational value of q (debugging aid only)."""
        value = Fraction(value)
        num = sum(Fraction(c) * value ** e for e, c in self.numerator.terms().items())
        den = sum(Fraction(c) * value ** e for e, c in self.denominator.terms().items())
        return num / den

    def complexity(self):
        return (self.num.degree() + self.den.degree(), self.num.height_bits() + self.den.height_bits())

    def __str__(self):
        num = _format_laurent(self.numerator.terms())
        if self.den.is_one():
            return num
        return f"({num}) / ({_format_laurent(self.denominator.terms())})"

    def __repr__(self):
        return f"Scalar({self})"


def _coerce_parts(value):
    if isinstance(value, Scalar):
        return value.num, value.exp, value.den
    if isinstance(value, LaurentPoly):
        return value.poly, value.shift, _ONE
    if isinstance(value, int):
        return fmpz_poly([value]), 0, _ONE
    if isinstance(value, Fraction):
        return fmpz_poly([value.numerator]), 0, fmpz_poly([value.denominator])
    if isinstance(value, str):
        s = parse_scalar(value)
        return s.num, s.exp, s.den
    raise TypeError(f"cannot build a Scalar from {type(value).__name__}")


ZERO = Scalar(0)
ONE = Scalar(1)
q = Scalar._poly(_ONE, 1)


def qpow(n):
    return Scalar._poly(_ONE, n)


def q_integer(n):
    """The quantum integer [n]_q = (q^n - q^-n) / (q - q^-1)."""
    if n < 0:
        raise ValueError("q_integer expects n >= 0")
    result = (qpow(n) - qpow(-n)) / (q - qpow(-1))
    assert result.is_laurent()
    return result


def to_scalar(value):
    if isinstance(value, Scalar):
        return value
    return Scalar(value)


# -- text format -------------------------------------------------------------

def parse_scalar(text):
    """Parse e.g. ``(q^2 - q^-2) / (q - q^-1)``."""
    ts = TokenStream(text)
    value = _expr(ts)
    if not ts.at_end():
        raise ParseError(f"trailing input: {ts.peek()[1]!r}")
    return value


def _expr(ts):
    value = _term(ts)
    while True:
        if ts.accept("op", "+"):
            value = value + _term(ts)
        elif ts.accept("op", "-"):
            value = value - _term(ts)
        else:
            return value


def _term(ts):
    value = _unary(ts)
    while True:
        if ts.accept("op", "*"):
            value = value * _unary(ts)
        elif ts.accept("op", "/"):
            value = value / _unary(ts)
        else:
            return value


def _unary(ts):
    if ts.accept("op", "-"):
        return -_unary(ts)
    if ts.accept("op", "+"):
        return _unary(ts)
    return _power(ts)


def _power(ts):
    base = _atom(ts)
    if ts.accept("op", "^"):
        sign = -1 if ts.accept("op", "-") else 1
        return base ** (sign * int(ts.expect("int")))
    return base


def _atom(ts):
    kind, val = ts.next()
    if kind == "int":
        return Scalar(int(val))
    if kind == "q":
        return q
    if kind == "op" and val == "(":
        value = _expr(ts)
        ts.expect("op", ")")
        return value
    raise ParseError(f"unexpected token {val!r}")

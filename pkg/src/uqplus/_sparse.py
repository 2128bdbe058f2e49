"""Sparse linear combinations with a factored-out rational prefactor.

An element is stored as ``scale * sum(poly_k * key_k)`` where ``scale`` is a
``Scalar`` and every ``poly_k`` is a nonzero integer polynomial in q.  The
polynomials are kept primitive (content 1, not all divisible by q), so the
inner loops of products only ever touch integer polynomials.
"""

from flint import fmpz_poly

from .scalar import ONE, ZERO, LaurentPoly, Scalar, _valuation, qpow, to_scalar

_ONE_POLY = fmpz_poly([1])


class Stats:
    """Running term-count statistics for the verification reports."""

    def __init__(self):
        self.max_terms = 0
        self.products = 0

    def reset(self):
        self.max_terms = 0
        self.products = 0

    def record(self, n):
        self.products += 1
        if n > self.max_terms:
            self.max_terms = n


stats = Stats()


def split_scalar(s):
    """Write ``s = q**e * n / d`` with n, d integer polynomials."""
    return s.exp, s.num, s.den


def polys_from_scalars(data):
    """Turn ``{key: Scalar}`` into ``(scale, {key: poly})``."""
    items = [(k, to_scalar(v)) for k, v in data.items()]
    items = [(k, v) for k, v in items if not v.is_zero()]
    if not items:
        return ONE, {}
    den = items[0][1].den
    for _, v in items[1:]:
        if v.den != den:
            g = den.gcd(v.den)
            den = den * (v.den // g)
    lo = min(v.exp for _, v in items)
    terms = {}
    for k, v in items:
        p = v.num * (den // v.den) if v.den != den else v.num
        if v.exp != lo:
            p = p.left_shift(v.exp - lo)
        terms[k] = p
    return Scalar._make(_ONE_POLY, lo, den), terms


def normalize(scale, terms):
    """Drop zero polys and move the common content of the rest into scale."""
    terms = {k: p for k, p in terms.items() if not p.is_zero()}
    if not terms:
        return ONE, terms
    polys = iter(terms.values())
    v = None
    for p in terms.values():
        if p[0] != 0:
            v = 0
            break
    if v is None:
        v = min(_valuation(p) for p in terms.values())
    g = next(polys)
    if v:
        g = g.right_shift(v)
    for p in polys:
        if g.is_one():
            break
        g = g.gcd(p.right_shift(v) if v else p)
    if g.is_one() or (g.degree() == 0 and abs(int(g[0])) == 1):
        g = None
    if v or g is not None:
        new = {}
        for k, p in terms.items():
            if v:
                p = p.right_shift(v)
            if g is not None:
                p = p // g
            new[k] = p
        terms = new
        factor = qpow(v)
        if g is not None:
            factor = factor * Scalar._make(g, 0, _ONE_POLY)
        scale = scale * factor
    return scale, terms


class SparseElement:
    """Common linear structure of free-algebra and model elements."""

    __slots__ = ("scale", "terms")

    def __init__(self, data=None):
        if data is None:
            self.scale, self.terms = ONE, {}
        else:
            self.scale, self.terms = normalize(*polys_from_scalars(data))

    @classmethod
    def _from_polys(cls, scale, terms, normalized=False):
        obj = cls.__new__(cls)
        if scale.is_zero():
            obj.scale, obj.terms = ONE, {}
        elif normalized:
            obj.scale, obj.terms = scale, terms
        else:
            obj.scale, obj.terms = normalize(scale, terms)
        return obj

    @classmethod
    def zero(cls):
        return cls._from_polys(ONE, {}, normalized=True)

    @classmethod
    def one(cls):
        return cls._from_polys(ONE, {cls.unit_key(): _ONE_POLY}, normalized=True)

    @classmethod
    def unit_key(cls):
        raise NotImplementedError

    @classmethod
    def scalar(cls, c):
        return cls.one() * to_scalar(c)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, key):
        p = self.terms.get(key)
        if p is None:
            return ZERO
        return self.scale * Scalar.from_laurent(LaurentPoly(p, 0))

    def keys(self):
        return sorted(self.terms, key=self.sort_key)

    def items(self):
        return [(k, self.coefficient(k)) for k in self.keys()]

    @staticmethod
    def sort_key(key):
        return key

    def constant_term(self):
        """Coefficient of the unit key."""
        return self.coefficient(self.unit_key())

    def is_scalar(self):
        return all(k == self.unit_key() for k in self.terms)

    # linear structure

    def _combine(self, other, sign=1):
        if not isinstance(other, SparseElement):
            other = type(self).scalar(other)
        if not other.terms:
            return self
        if not self.terms:
            return other if sign == 1 else -other
        r = other.scale / self.scale
        if sign == -1:
            r = -r
        e, n, d = split_scalar(r)
        m = min(0, e)
        if m == 0 and e == 0 and d.is_one() and n.is_one():
            terms = dict(self.terms)
            for k, p in other.terms.items():
                old = terms.get(k)
                terms[k] = p if old is None else old + p
            return type(self)._from_polys(self.scale, terms)
        mult_a = d.left_shift(-m) if m else d
        mult_b = n.left_shift(e - m) if e != m else n
        if mult_a.is_one():
            terms = dict(self.terms)
        else:
            terms = {k: p * mult_a for k, p in self.terms.items()}
        for k, p in other.terms.items():
            p = p * mult_b
            old = terms.get(k)
            terms[k] = p if old is None else old + p
        scale = self.scale * Scalar._make(_ONE_POLY, m, d)
        return type(self)._from_polys(scale, terms)

    def __add__(self, other):
        if isinstance(other, SparseElement) and type(other) is not type(self):
            return NotImplemented
        return self._combine(other, 1)

    def __radd__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        if isinstance(other, SparseElement) and type(other) is not type(self):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self)._combine(other, 1)

    def __neg__(self):
        return type(self)._from_polys(-self.scale, self.terms, normalized=True)

    def scaled(self, c):
        c = to_scalar(c)
        if c.is_zero() or not self.terms:
            return type(self).zero()
        return type(self)._from_polys(self.scale * c, self.terms, normalized=True)

    def __mul__(self, other):
        if isinstance(other, (Scalar, int, LaurentPoly)):
            return self.scaled(other)
        if isinstance(other, type(self)):
            return self.product(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Scalar, int, LaurentPoly)):
            return self.scaled(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scaled(to_scalar(other).inverse())

    def __pow__(self, n):
        result = type(self).one()
        for _ in range(n):
            result = result * self
        return result

    def product(self, other):
        raise NotImplementedError

    def __eq__(self, other):
        if isinstance(other, (int, Scalar)):
            other = type(self).scalar(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        if len(self.terms) != len(other.terms):
            return False
        return (self - other).is_zero()

    __hash__ = None

    def map_keys(self, fn):
        terms = {}
        for k, p in self.terms.items():
            k2 = fn(k)
            old = terms.get(k2)
            terms[k2] = p if old is None else old + p
        return type(self)._from_polys(self.scale, terms)

    def filter_keys(self, pred):
        return type(self)._from_polys(
            self.scale, {k: p for k, p in self.terms.items() if pred(k)}
        )

    def format_key(self, key):
        raise NotImplementedError

    def first_term(self):
        """``(key, coefficient)`` of the smallest key, or None if zero."""
        if not self.terms:
            return None
        k = min(self.terms, key=self.sort_key)
        return k, self.coefficient(k)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k, c in self.items():
            kt = self.format_key(k)
            if c.is_one():
                parts.append(kt)
            else:
                parts.append(f"({c})*{kt}")
        return " + ".join(parts)

    def __repr__(self):
        return f"{type(self).__name__}({self})"

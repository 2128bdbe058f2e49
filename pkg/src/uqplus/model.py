"""The model V (x) F[z1, z2, ...] of the alternating central extension.

Keys are pairs ``(word, zmon)`` where ``zmon`` is a tuple of exponents
``(a1, a2, ...)`` of ``z1, z2, ...`` with trailing zeros removed.  The word
factor multiplies by the q-shuffle product, the z factor commutatively.
"""

from collections import defaultdict

from ._sparse import SparseElement, stats
from ._text import ParseError, TokenStream
from .damiani import AlternatingKind, alternating_word
from .free import FreeElement, _coefficient, bidegree, shuffle_polys
from .scalar import ONE, qpow


def zmon(*exponents):
    e = list(exponents)
    while e and e[-1] == 0:
        e.pop()
    return tuple(e)


def z_index(n):
    """The z-monomial z_n (z_0 is the unit)."""
    if n == 0:
        return ()
    return (0,) * (n - 1) + (1,)


def zmon_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, e in enumerate(b):
        out[i] += e
    return tuple(out)


def zmon_grade(m):
    return sum(2 * (i + 1) * e for i, e in enumerate(m))


def format_zmon(m):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"z{i + 1}")
        elif e:
            parts.append(f"z{i + 1}^{e}")
    return " ".join(parts)


class ModelElement(SparseElement):
    __slots__ = ()

    @classmethod
    def unit_key(cls):
        return ("", ())

    @classmethod
    def basis(cls, word="", z=(), coeff=1):
        return cls({(word, zmon(*z)): coeff})

    @staticmethod
    def sort_key(key):
        w, m = key
        return (len(w) + zmon_grade(m), m, len(w), w)

    def format_key(self, key):
        w, m = key
        if not m:
            return w or "e"
        return f"{w or 'e'} (*) {format_zmon(m)}"

    def grades(self):
        return {len(w) + zmon_grade(m) for w, m in self.terms}

    def product(self, other):
        return model_mul(self, other)

    def word_part(self, m=()):
        """The element of V multiplying the z-monomial ``m``."""
        return FreeElement._from_polys(
            self.scale, {w: p for (w, mm), p in self.terms.items() if mm == m})


def _by_zmon(terms):
    groups = defaultdict(dict)
    for (w, m), p in terms.items():
        groups[m][w] = p
    return groups


def model_mul(a, b):
    ga = _by_zmon(a.terms)
    gb = _by_zmon(b.terms)
    pieces = []
    big = 0
    for ma, wa in ga.items():
        for mb, wb in gb.items():
            res, M = shuffle_polys(wa, wb)
            pieces.append((zmon_mul(ma, mb), res, M))
            if M > big:
                big = M
    terms = {}
    for m, res, M in pieces:
        sh = big - M
        for w, c in res.items():
            if sh:
                c = c.left_shift(sh)
            key = (w, m)
            old = terms.get(key)
            terms[key] = c if old is None else old + c
    stats.record(len(terms))
    return ModelElement._from_polys(a.scale * b.scale * qpow(-big), terms)


def from_free(f, m=()):
    """The element ``f (x) z^m``."""
    m = zmon(*m)
    return ModelElement._from_polys(f.scale, {(w, m): p for w, p in f.terms.items()})


def gen_image(kind, n):
    """Image of the alternating generator with index n.

    Index conventions: ``(Wminus, n)`` is W_{-n}, ``(Wplus, n)`` is
    W_{n+1}, ``(G, n)`` and ``(Gtilde, n)`` are G_n and G~_n.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    kind = AlternatingKind(kind)
    data = {}
    for k in range(n + 1):
        w = next(iter(alternating_word(kind, n - k).terms))
        data[(w, z_index(k))] = 1
    return ModelElement(data)


def zvee_element(n):
    """Z^vee_n computed from the generator images."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n == 0:
        return ModelElement.one()
    total = ModelElement.zero()
    for k in range(n + 1):
        term = gen_image(AlternatingKind.G, k) * gen_image(AlternatingKind.Gtilde, n - k)
        total = total + term.scaled(qpow(n - 2 * k))
    for k in range(n):
        term = gen_image(AlternatingKind.Wminus, k) * gen_image(AlternatingKind.Wplus, n - k - 1)
        total = total - term.scaled(qpow(n - 2 * k))
    return total


def zvee_poly(n):
    """epsilon (x) sum_k z_k z_{n-k} q^{n-2k}."""
    if n == 0:
        return ModelElement.one()
    data = defaultdict(lambda: ONE.__class__(0))
    for k in range(n + 1):
        data[("", zmon_mul(z_index(k), z_index(n - k)))] += qpow(n - 2 * k)
    return ModelElement(dict(data))


def apply_sigma(a):
    return a.map_keys(lambda key: (key[0].translate(str.maketrans("xy", "yx")), key[1]))


def apply_dagger(a):
    return a.map_keys(lambda key: (key[0][::-1], key[1]))


def apply_tau(a):
    return apply_sigma(apply_dagger(a))


def counit_z(a):
    """Set every z_k to zero and return the remaining element of V."""
    return a.word_part(())


# -- text format -------------------------------------------------------------

def parse_model(text):
    """Parse e.g. ``xyx + (q^2)*x (*) z1 - e (*) z1^2 z3``."""
    ts = TokenStream(text)
    total = ModelElement.zero()
    sign = -1 if ts.accept("op", "-") else 1
    while True:
        kind, _ = ts.peek()
        coeff = ONE
        if kind not in ("word", "tensor"):
            coeff = _coefficient(ts)
            if not ts.accept("op", "*"):
                total = total + ModelElement.one().scaled(coeff * sign)
                coeff = None
        if coeff is not None:
            total = total + _model_atom(ts).scaled(coeff * sign)
        if ts.accept("op", "+"):
            sign = 1
        elif ts.accept("op", "-"):
            sign = -1
        elif ts.at_end():
            return total
        else:
            raise ParseError(f"unexpected token {ts.peek()[1]!r}")


def _model_atom(ts):
    w = ts.accept("word") or "e"
    w = "" if w == "e" else w
    exps = defaultdict(int)
    if ts.accept("tensor"):
        while ts.peek()[0] == "z":
            idx = int(ts.next()[1][1:])
            if idx < 1:
                raise ParseError("z indices start at 1")
            e = 1
            if ts.accept("op", "^"):
                e = int(ts.expect("int"))
            exps[idx] += e
    m = zmon(*[exps.get(i, 0) for i in range(1, max(exps, default=0) + 1)])
    return ModelElement.basis(w, m)

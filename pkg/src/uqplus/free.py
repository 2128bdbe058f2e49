"""The free algebra on x, y with concatenation and the q-shuffle product.

Words are Python strings over ``"xy"``; the empty string is the unit of both
products.  ``FreeElement * FreeElement`` is the q-shuffle product, which is
the product of U_q^+ under its embedding; concatenation is ``concat``.
"""

from collections import defaultdict

from flint import fmpz_poly

from ._sparse import SparseElement, stats
from ._text import ParseError, TokenStream
from .scalar import ONE, Scalar, _expr as _scalar_expr, qpow

LETTERS = "xy"
_SWAP = str.maketrans("xy", "yx")

# Crossing-weight sign; -1 only inside the mutation self-test.
_weight_sign = 1

MAX_WORD_LENGTH = 24


def pairing(u, v):
    """The form <u, v> on letters: 2 if equal, -2 otherwise."""
    if u not in LETTERS or v not in LETTERS:
        raise ValueError(f"not a letter pair: {u!r}, {v!r}")
    return 2 if u == v else -2


def bidegree(word):
    return (word.count("x"), word.count("y"))


class FreeElement(SparseElement):
    __slots__ = ()

    @classmethod
    def unit_key(cls):
        return ""

    @classmethod
    def word(cls, w, coeff=1):
        if any(ch not in LETTERS for ch in w):
            raise ValueError(f"not a word over x, y: {w!r}")
        return cls({w: coeff})

    @staticmethod
    def sort_key(key):
        return (len(key), key)

    def format_key(self, key):
        return key or "e"

    def bidegrees(self):
        return {bidegree(w) for w in self.terms}

    def homogeneous_component(self, bideg):
        return self.filter_keys(lambda w: bidegree(w) == bideg)

    def product(self, other):
        return shuffle_mul(self, other)

    def concat(self, other):
        return concat_mul(self, other)

    def swap_letters(self):
        return swap_letters(self)

    def reverse_words(self):
        return reverse_words(self)


X = FreeElement.word("x")
Y = FreeElement.word("y")


def concat_mul(a, b):
    terms = {}
    for u, p in a.terms.items():
        for v, r in b.terms.items():
            w = u + v
            pr = p * r
            old = terms.get(w)
            terms[w] = pr if old is None else old + pr
    stats.record(len(terms))
    return FreeElement._from_polys(a.scale * b.scale, terms)


def _group(polys, key):
    groups = defaultdict(dict)
    for w, p in polys.items():
        groups[key(w)][w] = p
    return groups


def _shuffle_block(A, B, m, n, ax, ay, sign):
    """q-shuffle of homogeneous blocks; result carries a factor q^(-2mn).

    A holds words of length m with bidegree (ax, ay), B words of length n.
    State (p, r) is the shuffle of the p-derivative of A with the
    r-derivative of B; states are evaluated one level of |p| + |r| at a
    time so only two levels are alive.
    """
    prefA = [set() for _ in range(m + 1)]
    prefB = [set() for _ in range(n + 1)]
    sufA = defaultdict(list)
    sufB = defaultdict(list)
    for w, c in A.items():
        for i in range(m + 1):
            prefA[i].add(w[:i])
            sufA[w[:i]].append((w[i:], c))
    for w, c in B.items():
        for j in range(n + 1):
            prefB[j].add(w[:j])
            sufB[w[:j]].append((w[j:], c))

    nxt = {}
    for d in range(m + n, -1, -1):
        cur = {}
        for i in range(max(0, d - n), min(m, d) + 1):
            j = d - i
            if i == m:
                for p in prefA[m]:
                    ap = A[p]
                    for r in prefB[j]:
                        cur[(p, r)] = {s: ap * c for s, c in sufB[r]}
                continue
            if j == n:
                for r in prefB[n]:
                    br = B[r]
                    for p in prefA[i]:
                        cur[(p, r)] = {s: c * br for s, c in sufA[p]}
                continue
            sh_a = 2 * (n - j)
            base = 2 * (m - i)
            for p in prefA[i]:
                rx = ax - p.count("x")
                ry = ay - p.count("y")
                ex = base + sign * 2 * (rx - ry)
                ey = base + sign * 2 * (ry - rx)
                px, py = p + "x", p + "y"
                for r in prefB[j]:
                    out = {}
                    for l, pl, e_b in (("x", px, ex), ("y", py, ey)):
                        src = nxt.get((pl, r))
                        if src is not None:
                            if sh_a:
                                for w, c in src.items():
                                    out[l + w] = c.left_shift(sh_a)
                            else:
                                for w, c in src.items():
                                    out[l + w] = c
                        src = nxt.get((p, r + l))
                        if src is not None:
                            for w, c in src.items():
                                key = l + w
                                if e_b:
                                    c = c.left_shift(e_b)
                                old = out.get(key)
                                out[key] = c if old is None else old + c
                    cur[(p, r)] = out
        nxt = cur
    return nxt[("", "")]


def shuffle_polys(A, B):
    """q-shuffle on raw ``{word: poly}`` maps; returns ``(terms, M)``.

    The true product is ``q**(-M) * terms``.
    """
    if not A or not B:
        return {}, 0
    sign = _weight_sign
    groups_a = _group(A, bidegree)
    groups_b = _group(B, len)
    pieces = []
    big = 0
    for (ax, ay), ga in groups_a.items():
        m = ax + ay
        for n, gb in groups_b.items():
            if m + n > MAX_WORD_LENGTH:
                raise ValueError(f"word length {m + n} exceeds the configured maximum")
            res = _shuffle_block(ga, gb, m, n, ax, ay, sign)
            pieces.append((res, 2 * m * n))
            big = max(big, 2 * m * n)
    if len(pieces) == 1:
        return pieces[0][0], pieces[0][1]
    terms = {}
    for res, off in pieces:
        sh = big - off
        for w, c in res.items():
            if sh:
                c = c.left_shift(sh)
            old = terms.get(w)
            terms[w] = c if old is None else old + c
    return terms, big


def shuffle_mul(a, b):
    terms, M = shuffle_polys(a.terms, b.terms)
    stats.record(len(terms))
    return FreeElement._from_polys(a.scale * b.scale * qpow(-M), terms)


def swap_letters(a):
    return a.map_keys(lambda w: w.translate(_SWAP))


def reverse_words(a):
    return a.map_keys(lambda w: w[::-1])


# -- text format -------------------------------------------------------------

def parse_free(text):
    """Parse ``(q^-4 - 1)*xy + yx``; ``e`` denotes the empty word."""
    ts = TokenStream(text)
    result = _linear_combination(ts, _free_atom, FreeElement)
    if not ts.at_end():
        raise ParseError(f"trailing input: {ts.peek()[1]!r}")
    return result


def _free_atom(ts):
    w = ts.expect("word")
    return FreeElement.word("" if w == "e" else w)


def _linear_combination(ts, atom, cls):
    """``[-] [coeff *] atom`` terms joined by + or -."""
    total = cls.zero()
    sign = 1
    if ts.accept("op", "-"):
        sign = -1
    while True:
        total = total + _signed_term(ts, atom, cls).scaled(sign)
        if ts.accept("op", "+"):
            sign = 1
        elif ts.accept("op", "-"):
            sign = -1
        else:
            return total


def _signed_term(ts, atom, cls):
    kind, _ = ts.peek()
    if kind in ("word",):
        return atom(ts)
    coeff = _coefficient(ts)
    if ts.accept("op", "*"):
        return atom(ts).scaled(coeff)
    # a bare coefficient is a multiple of the unit, so "0" reads back as zero
    return cls.one().scaled(coeff)


def _coefficient(ts):
    kind, val = ts.peek()
    if kind == "op" and val == "(":
        ts.next()
        c = _scalar_expr(ts)
        ts.expect("op", ")")
        return c
    if kind == "int":
        ts.next()
        return Scalar(int(val))
    if kind == "q":
        ts.next()
        if ts.accept("op", "^"):
            sign = -1 if ts.accept("op", "-") else 1
            return qpow(sign * int(ts.expect("int")))
        return qpow(1)
    raise ParseError(f"unexpected token {val!r}")


def shuffle_words(*words):
    """Shuffle product of plain words (CLI calculator)."""
    result = FreeElement.one()
    for w in words:
        result = result * FreeElement.word(w)
    return result


__all__ = [
    "FreeElement",
    "X",
    "Y",
    "ONE",
    "pairing",
    "bidegree",
    "concat_mul",
    "shuffle_mul",
    "swap_letters",
    "reverse_words",
    "parse_free",
    "shuffle_words",
    "shuffle_polys",
]

"""Normal forms in the alternating central extension.

Products of alternating generators are rewritten into ordered PBW monomials
with the reduction rules for two PBW orders.  The rules are validated
against the model (see ``to_model``).
"""

import re
from enum import Enum
from typing import NamedTuple

from .damiani import AlternatingKind as K
from .model import ModelElement, gen_image
from .scalar import ONE, Scalar, q, qpow

MAX_ITERATIONS = 10 ** 6
INDEX_BOUND = 16


class RewriteError(RuntimeError):
    pass


class GenSymbol(NamedTuple):
    """An alternating generator.

    ``(Wminus, k)`` is W_{-k}, ``(Wplus, k)`` is W_{k+1}, ``(G, k)`` is
    G_k and ``(Gtilde, k)`` is G~_k.  G_0 = G~_0 = 1 never appears inside
    a monomial.
    """

    kind: K
    index: int

    def grade(self):
        if self.kind in (K.Wminus, K.Wplus):
            return 2 * self.index + 1
        return 2 * self.index

    def is_unit(self):
        return self.kind in (K.G, K.Gtilde) and self.index == 0

    def __str__(self):
        if self.kind is K.Wminus:
            return f"W[{-self.index}]" if self.index else "W[0]"
        if self.kind is K.Wplus:
            return f"W[{self.index + 1}]"
        if self.kind is K.G:
            return f"G[{self.index}]"
        return f"Gt[{self.index}]"


def Wm(k):
    return GenSymbol(K.Wminus, k)


def Wp(k):
    return GenSymbol(K.Wplus, k)


def G(k):
    return GenSymbol(K.G, k)


def Gt(k):
    return GenSymbol(K.Gtilde, k)


class PbwOrder(Enum):
    MAIN = "main"
    APPENDIX = "appendix"


_FAMILY_RANK = {
    PbwOrder.MAIN: {K.G: 0, K.Wminus: 1, K.Wplus: 2, K.Gtilde: 3},
    PbwOrder.APPENDIX: {K.Wminus: 0, K.G: 1, K.Gtilde: 2, K.Wplus: 3},
}


def symbol_key(order, s):
    return (_FAMILY_RANK[order][s.kind], s.index)


# -- reduction rules ---------------------------------------------------------
#
# A rule rewrites an out-of-order pair a b (a from family ``left``, b from
# family ``right``) as
#     b a + c * sum_{l=0}^{min(i,j)} (first(l) - second(l)),
# where i, j are the rule parameters of a and b (the symbol index for the W
# families, index - 1 for the G families).  ``first`` and ``second`` are
# pairs of (family, "l" | "r"), with "l" meaning index l and "r" meaning
# index i + j + 1 - l.

_QM = q - qpow(-1)


class Rule(NamedTuple):
    name: str
    left: K
    right: K
    coeff: Scalar
    first: tuple
    second: tuple


_MAIN_RULES = [
    Rule("WpWm", K.Wplus, K.Wminus, qpow(-1) * _QM,
         ((K.G, "r"), (K.Gtilde, "l")), ((K.G, "l"), (K.Gtilde, "r"))),
    Rule("GtG", K.Gtilde, K.G, q * _QM,
         ((K.Wminus, "r"), (K.Wplus, "l")), ((K.Wminus, "l"), (K.Wplus, "r"))),
    Rule("WmG", K.Wminus, K.G, qpow(-1) * _QM,
         ((K.G, "l"), (K.Wminus, "r")), ((K.G, "r"), (K.Wminus, "l"))),
    Rule("WpG", K.Wplus, K.G, q * _QM,
         ((K.G, "r"), (K.Wplus, "l")), ((K.G, "l"), (K.Wplus, "r"))),
    Rule("GtWm", K.Gtilde, K.Wminus, qpow(-1) * _QM,
         ((K.Wminus, "r"), (K.Gtilde, "l")), ((K.Wminus, "l"), (K.Gtilde, "r"))),
    Rule("GtWp", K.Gtilde, K.Wplus, q * _QM,
         ((K.Wplus, "l"), (K.Gtilde, "r")), ((K.Wplus, "r"), (K.Gtilde, "l"))),
]

_APPENDIX_RULES = [
    Rule("WpWm", K.Wplus, K.Wminus, qpow(-1) * _QM,
         ((K.G, "r"), (K.Gtilde, "l")), ((K.G, "l"), (K.Gtilde, "r"))),
    Rule("GtG", K.Gtilde, K.G, q * _QM,
         ((K.Wminus, "r"), (K.Wplus, "l")), ((K.Wminus, "l"), (K.Wplus, "r"))),
    Rule("GWm", K.G, K.Wminus, q * _QM,
         ((K.Wminus, "l"), (K.G, "r")), ((K.Wminus, "r"), (K.G, "l"))),
    Rule("WpG", K.Wplus, K.G, q * _QM,
         ((K.G, "r"), (K.Wplus, "l")), ((K.G, "l"), (K.Wplus, "r"))),
    Rule("GtWm", K.Gtilde, K.Wminus, qpow(-1) * _QM,
         ((K.Wminus, "r"), (K.Gtilde, "l")), ((K.Wminus, "l"), (K.Gtilde, "r"))),
    Rule("WpGt", K.Wplus, K.Gtilde, qpow(-1) * _QM,
         ((K.Gtilde, "l"), (K.Wplus, "r")), ((K.Gtilde, "r"), (K.Wplus, "l"))),
]

RULES = {
    PbwOrder.MAIN: {(r.left, r.right): r for r in _MAIN_RULES},
    PbwOrder.APPENDIX: {(r.left, r.right): r for r in _APPENDIX_RULES},
}

RULE_SLOTS = ("swap", "first", "second")

# (order, rule name, slot) whose coefficient is multiplied by q; used only
# by the mutation self-test.
_perturbation = None
_cache_generation = 0


def set_perturbation(value):
    """Install ``(order, rule_name, slot)`` or None, and drop caches."""
    global _perturbation, _cache_generation
    _perturbation = value
    _cache_generation += 1
    _pair_cache.clear()


def all_rules():
    for order, table in RULES.items():
        for r in table.values():
            yield order, r.name


def _param(s):
    return s.index - 1 if s.kind in (K.G, K.Gtilde) else s.index


def _sym(kind, idx):
    return GenSymbol(kind, idx)


def _pair_monomial(spec, l, r):
    out = []
    for kind, which in spec:
        s = _sym(kind, l if which == "l" else r)
        if not s.is_unit():
            out.append(s)
    return tuple(out)


_pair_cache = {}


def rewrite_pair(order, a, b):
    """Rewrite the out-of-order adjacent pair ``a b``.

    Returns a list of ``(coefficient, monomial)``; monomials are tuples of
    symbols.  Within a family the generators commute.
    """
    key = (order, a, b)
    hit = _pair_cache.get(key)
    if hit is not None:
        return hit
    if a.kind == b.kind:
        result = [(ONE, (b, a))]
    else:
        rule = RULES[order].get((a.kind, b.kind))
        if rule is None:
            raise RewriteError(f"no reduction rule for {a} {b} in the {order.value} order")
        pert = _perturbation
        bump = {}
        if pert is not None and pert[0] is order and pert[1] == rule.name:
            bump[pert[2]] = q
        i, j = _param(a), _param(b)
        c = rule.coeff
        result = [(bump.get("swap", ONE), (b, a))]
        c1 = c * bump.get("first", ONE)
        c2 = -c * bump.get("second", ONE)
        for l in range(min(i, j) + 1):
            r = i + j + 1 - l
            result.append((c1, _pair_monomial(rule.first, l, r)))
            result.append((c2, _pair_monomial(rule.second, l, r)))
    _pair_cache[key] = result
    return result


# -- normal forms ------------------------------------------------------------

class NormalForm:
    """Linear combination of ordered monomials, keyed by symbol tuples."""

    __slots__ = ("terms", "order")

    def __init__(self, terms, order):
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}
        self.order = order

    @classmethod
    def one(cls, order=PbwOrder.MAIN):
        return cls({(): ONE}, order)

    @classmethod
    def monomial(cls, symbols, order=PbwOrder.MAIN, coeff=ONE):
        return normal_form(symbols, order, coeff)

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), Scalar(0))

    def is_sorted(self):
        return all(is_sorted(m, self.order) for m in self.terms)

    def __add__(self, other):
        _same_order(self, other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms[m] + c if m in terms else c
        return NormalForm(terms, self.order)

    def __neg__(self):
        return NormalForm({m: -c for m, c in self.terms.items()}, self.order)

    def __sub__(self, other):
        return self + (-other)

    def scaled(self, c):
        return NormalForm({m: c * v for m, v in self.terms.items()}, self.order)

    def __mul__(self, other):
        if isinstance(other, NormalForm):
            return pbw_mul(self, other)
        return self.scaled(Scalar(other) if isinstance(other, int) else other)

    def __rmul__(self, other):
        return self.scaled(Scalar(other) if isinstance(other, int) else other)

    def __eq__(self, other):
        if not isinstance(other, NormalForm):
            return NotImplemented
        return self.order is other.order and (self - other).is_zero()

    __hash__ = None

    def sorted_items(self):
        return sorted(self.terms.items(),
                      key=lambda mc: (len(mc[0]), [symbol_key(self.order, s) for s in mc[0]]))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_items():
            mono = " ".join(str(s) for s in m) or "1"
            parts.append(mono if c.is_one() else f"({c})*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"NormalForm({self})"


def _same_order(a, b):
    if a.order is not b.order:
        raise ValueError("normal forms use different PBW orders")


def is_sorted(mono, order):
    keys = [symbol_key(order, s) for s in mono]
    return all(keys[k] <= keys[k + 1] for k in range(len(keys) - 1))


def _check_symbol(s, bound):
    if s.index < 0:
        raise ValueError(f"negative index in {s}")
    if s.index > bound:
        raise RewriteError(f"generator {s} exceeds the index bound {bound}")


def normal_form(symbols, order=PbwOrder.MAIN, coeff=ONE,
                max_iterations=MAX_ITERATIONS, index_bound=INDEX_BOUND):
    """Rewrite ``coeff * s1 s2 ... sn`` into ordered monomials.

    Uses the leftmost out-of-order adjacent pair.  Raises ``RewriteError``
    if more than ``max_iterations`` rules are applied.
    """
    order = PbwOrder(order)
    mono = []
    for s in symbols:
        s = GenSymbol(K(s[0]), s[1])
        _check_symbol(s, index_bound)
        if not s.is_unit():
            mono.append(s)
    return _normalize({tuple(mono): coeff}, order, max_iterations, index_bound)


def _normalize(work, order, max_iterations, index_bound):
    rank = _FAMILY_RANK[order]
    # Rewriting never lengthens a monomial, so buckets by length are drained
    # from the longest down; equal monomials merge before being expanded.
    buckets = {}
    for m, c in work.items():
        buckets.setdefault(len(m), {})[m] = c
    done = {}
    steps = 0
    for length in range(max(buckets, default=0), -1, -1):
        bucket = buckets.get(length)
        if bucket is None:
            continue
        while bucket:
            mono, c = bucket.popitem()
            if c.is_zero():
                continue
            pos = -1
            for k in range(length - 1):
                a, b = mono[k], mono[k + 1]
                if (rank[a.kind], a.index) > (rank[b.kind], b.index):
                    pos = k
                    break
            if pos < 0:
                done[mono] = done[mono] + c if mono in done else c
                continue
            steps += 1
            if steps > max_iterations:
                raise RewriteError(
                    f"iteration cap of {max_iterations} rule applications exceeded")
            head, tail = mono[:pos], mono[pos + 2:]
            for cc, mid in rewrite_pair(order, mono[pos], mono[pos + 1]):
                for s in mid:
                    if s.index > index_bound:
                        raise RewriteError(
                            f"generator {s} exceeds the index bound {index_bound}")
                new = head + mid + tail
                target = bucket if len(new) == length else buckets.setdefault(len(new), {})
                v = c * cc
                target[new] = target[new] + v if new in target else v
    return NormalForm(done, order)


class MemoNormalizer:
    """Normal forms by recursion on the leftmost rewrite, memoized per monomial.

    Agrees with ``normal_form`` term by term; it pays off when many
    monomials with shared pieces are normalized, as in exhaustive sweeps.
    """

    def __init__(self, order=PbwOrder.MAIN):
        self.order = PbwOrder(order)
        self._memo = {}
        self._generation = _cache_generation

    def __call__(self, symbols):
        if self._generation != _cache_generation:
            self._memo.clear()
            self._generation = _cache_generation
        mono = tuple(s for s in symbols if not s.is_unit())
        return NormalForm(dict(self._expand(mono)), self.order)

    def _expand(self, mono):
        hit = self._memo.get(mono)
        if hit is not None:
            return hit
        rank = _FAMILY_RANK[self.order]
        pos = -1
        for k in range(len(mono) - 1):
            a, b = mono[k], mono[k + 1]
            if (rank[a.kind], a.index) > (rank[b.kind], b.index):
                pos = k
                break
        if pos < 0:
            out = {mono: ONE}
        else:
            out = {}
            head, tail = mono[:pos], mono[pos + 2:]
            for cc, mid in rewrite_pair(self.order, mono[pos], mono[pos + 1]):
                for m, c in self._expand(head + mid + tail).items():
                    v = cc * c
                    out[m] = out[m] + v if m in out else v
            out = {m: c for m, c in out.items() if not c.is_zero()}
        self._memo[mono] = out
        return out


def pbw_mul(a, b):
    _same_order(a, b)
    work = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            m = ma + mb
            v = ca * cb
            work[m] = work[m] + v if m in work else v
    return _normalize(work, a.order, MAX_ITERATIONS, INDEX_BOUND)


# -- the model as oracle -----------------------------------------------------

_image_cache = {}


def monomial_image(mono):
    """Model image of an (unnormalized) monomial, cached by prefix."""
    mono = tuple(mono)
    hit = _image_cache.get(mono)
    if hit is not None:
        return hit
    if not mono:
        img = ModelElement.one()
    elif len(mono) == 1:
        img = gen_image(mono[0].kind, mono[0].index)
    else:
        img = monomial_image(mono[:-1]) * monomial_image(mono[-1:])
    _image_cache[mono] = img
    return img


def clear_image_cache():
    _image_cache.clear()


def to_model(nf):
    total = ModelElement.zero()
    for m, c in nf.terms.items():
        total = total + monomial_image(m).scaled(c)
    return total


# -- enumeration -------------------------------------------------------------

def symbols_up_to_grade(grade):
    out = []
    for k in range((grade - 1) // 2 + 1):
        if 2 * k + 1 <= grade:
            out += [Wm(k), Wp(k)]
    for k in range(1, grade // 2 + 1):
        out += [G(k), Gt(k)]
    return out


def ordered_monomials(grade, order=PbwOrder.MAIN):
    """All ordered monomials of total grade exactly ``grade``."""
    order = PbwOrder(order)
    syms = sorted(symbols_up_to_grade(grade), key=lambda s: symbol_key(order, s))
    result = []

    def extend(start, remaining, acc):
        if remaining == 0:
            result.append(tuple(acc))
            return
        for idx in range(start, len(syms)):
            s = syms[idx]
            g = s.grade()
            if g <= remaining:
                acc.append(s)
                extend(idx, remaining - g, acc)
                acc.pop()

    extend(0, grade, [])
    return result


# -- text format -------------------------------------------------------------

_TOKEN = re.compile(r"^(W|Wt|G|Gt)\[(-?\d+)\]$")


def parse_symbol(token):
    """``W[-k]`` is W_{-k}; ``W[n]`` and ``Wt[n]`` (n >= 1) are W_n."""
    m = _TOKEN.match(token.strip())
    if m is None:
        raise ValueError(f"not a generator token: {token!r}")
    fam, n = m.group(1), int(m.group(2))
    if fam == "W":
        return Wm(-n) if n <= 0 else Wp(n - 1)
    if fam == "Wt":
        if n < 1:
            raise ValueError("Wt[n] needs n >= 1")
        return Wp(n - 1)
    if n < 0:
        raise ValueError(f"negative index in {token!r}")
    return G(n) if fam == "G" else Gt(n)


def parse_monomial(text):
    return [parse_symbol(tok) for tok in text.split()]

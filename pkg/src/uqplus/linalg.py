"""Exact rank over Q(q) by fraction-free elimination over Z[q]."""

from flint import fmpz_poly

from ._sparse import normalize, polys_from_scalars
from .scalar import Scalar, to_scalar


class ExactMatrix:
    """Dense rectangular matrix of Scalars."""

    def __init__(self, rows):
        self.entries = [[to_scalar(v) for v in row] for row in rows]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("rows have different lengths")

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def sparse_rows(self):
        """Each row as ``{column: integer polynomial}``, denominators cleared."""
        out = []
        for row in self.entries:
            _, polys = polys_from_scalars({j: v for j, v in enumerate(row)})
            out.append(polys)
        return out

    def rank(self):
        return rank_over_field(self)


def _complexity(p):
    return (p.degree(), sum(abs(int(c)) for c in p.coeffs()))


def _primitive(row):
    return normalize(Scalar(1), row)[1]


def rank_of_rows(rows):
    """Rank of sparse rows ``{column: fmpz_poly}`` over Q(q).

    Row scales are irrelevant to the rank, so each row is reduced to its
    primitive part after every elimination step.
    """
    rows = [_primitive(dict(r)) for r in rows if r]
    rows = [r for r in rows if r]
    rank = 0
    while rows:
        # Pivot on the lowest-complexity entry of the sparsest row.
        idx = min(range(len(rows)), key=lambda k: len(rows[k]))
        prow = rows.pop(idx)
        col = min(prow, key=lambda c: _complexity(prow[c]))
        piv = prow[col]
        rank += 1
        nxt = []
        for r in rows:
            a = r.get(col)
            if a is None:
                nxt.append(r)
                continue
            g = piv.gcd(a)
            mp, ma = piv // g, a // g
            new = {c: v * mp for c, v in r.items() if c != col}
            for c, v in prow.items():
                if c == col:
                    continue
                w = new.get(c)
                val = -(v * ma) if w is None else w - v * ma
                if val.is_zero():
                    new.pop(c, None)
                else:
                    new[c] = val
            new = _primitive(new)
            if new:
                nxt.append(new)
        rows = nxt
    return rank


def rank_over_field(m):
    return rank_of_rows(m.sparse_rows())

from uqplus.linalg import ExactMatrix, rank_of_rows, rank_over_field
from uqplus.scalar import q, qpow
from uqplus import pbw
from uqplus.checks import independence_data


def test_small_ranks():
    assert rank_over_field(ExactMatrix.identity(3)) == 3
    assert rank_over_field(ExactMatrix.zeros(2, 3)) == 0
    assert ExactMatrix([[1, q], [q, q * q]]).rank() == 1
    assert ExactMatrix([[1, q], [q, qpow(2) + 1]]).rank() == 2


def test_rational_entries():
    m = ExactMatrix([[(q - qpow(-1)).inverse(), 1], [1, q - qpow(-1)]])
    assert m.rank() == 1


def test_rank_of_sparse_rows():
    from flint import fmpz_poly
    rows = [{0: fmpz_poly([1]), 2: fmpz_poly([0, 1])}, {0: fmpz_poly([0, 2]), 2: fmpz_poly([0, 0, 2])}]
    assert rank_of_rows(rows) == 1


def test_independence_low_grades():
    for order in pbw.PbwOrder:
        data = independence_data(4, order)
        assert data[0] == (0, 1, 1)
        assert data[1] == (1, 2, 2)
        assert data[2] == (2, 5, 5)
        assert sum(c for _, c, _ in data) == sum(r for _, _, r in data) == 1 + 2 + 5 + 10 + 20

"""Exact computations in U_q^+ (positive part of U_q(sl2-hat)) and in its
alternating central extension, realized inside the q-shuffle algebra."""

from .scalar import ONE, ZERO, LaurentPoly, Scalar, parse_scalar, q, q_integer, qpow
from .free import FreeElement, X, Y, parse_free, shuffle_mul, concat_mul
from .brackets import commutator, qcommutator
from .damiani import (AlternatingKind, DamianiCache, damiani_e_delta, damiani_e_minus,
                      damiani_e_plus, xi)
from .series import Series1, Series2, divided_difference, series_inverse, series_mul
from .model import ModelElement, from_free, gen_image, parse_model, zvee_element, zvee_poly
from .pbw import (GenSymbol, NormalForm, PbwOrder, normal_form, parse_monomial, pbw_mul,
                  to_model)
from .linalg import ExactMatrix, rank_over_field
from .checks import CHECK_ORDER, CheckSpec, run_check, self_test

__version__ = "0.1.0"

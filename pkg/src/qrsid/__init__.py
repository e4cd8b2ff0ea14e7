"""Exact verification of multi-sum Rogers-Ramanujan type identities."""

from .errors import QRSIDError
from .kernels import BACKEND
from .monomial import Monomial
from .products import ProductExpr, poch_finite, poch_inf, prodmake, product_expr_eval, product_form
from .qseries import QSeries, render
from .ring import I, ONE, ZERO, Scalar, zeta_power
from .sums import ParamForm, QuadForm, Subscript, SumSideSpec, sum_side_eval, sum_sides_eval

__all__ = [
    "BACKEND",
    "I",
    "ONE",
    "ZERO",
    "Monomial",
    "ParamForm",
    "ProductExpr",
    "QRSIDError",
    "QSeries",
    "QuadForm",
    "Scalar",
    "Subscript",
    "SumSideSpec",
    "poch_finite",
    "poch_inf",
    "prodmake",
    "product_expr_eval",
    "product_form",
    "render",
    "sum_side_eval",
    "sum_sides_eval",
    "zeta_power",
]

"""μ-bases of the syzygy module of a univariate polynomial vector, in exact arithmetic."""

from .arith import GF, QQ, Field, FieldScalar
from .hhk import MuBasisMatrix, compute_mu_basis, compute_mu_basis_traced, predict_degrees
from .poly import MINUS_INFINITY, InputVector, Polynomial, PolyVector, dot, euclid_gcd
from .sg import sg_mu_basis
from .verify import gcd_via_mubasis, outer_product, verify_basis

__all__ = [
    "GF", "QQ", "Field", "FieldScalar",
    "MuBasisMatrix", "compute_mu_basis", "compute_mu_basis_traced", "predict_degrees",
    "MINUS_INFINITY", "InputVector", "Polynomial", "PolyVector", "dot", "euclid_gcd",
    "sg_mu_basis", "gcd_via_mubasis", "outer_product", "verify_basis",
]

"""Exact computations in the equivariant cohomology of type A Springer fibers.

The common entry points are re-exported here; the submodules hold the rest.

>>> from eqspringer import expand_back_substitution, parse_poly
>>> f = parse_poly("x1 + x2 + x3 - 2*z1 - z2", (4, 2))
>>> [str(c) for c in expand_back_substitution(f, (2, 2)).coefficients]
['0', '1', '1', '1', '0', '0']
"""

from .exactpoly import Ambient, Polynomial, RationalFunction
from .expand import (
    build_p_delta, equal_in_quotient, expand_back_substitution, expand_determinant,
    project_monomial,
)
from .parse import ParseError, parse_poly
from .schubert import (
    double_schubert_polynomial, linear_relations, positivity_scan, project_polynomial,
    schubert_polynomial, w_alpha_set,
)
from .springer import localization_matrix, localize, shape_data, springer_monomials
from .tableaux import RowStrictTableau, ShapeError, enumerate_tableaux, inversion_vector

__all__ = [
    "Ambient", "Polynomial", "RationalFunction",
    "build_p_delta", "equal_in_quotient", "expand_back_substitution", "expand_determinant",
    "project_monomial",
    "ParseError", "parse_poly",
    "double_schubert_polynomial", "linear_relations", "positivity_scan", "project_polynomial",
    "schubert_polynomial", "w_alpha_set",
    "localization_matrix", "localize", "shape_data", "springer_monomials",
    "RowStrictTableau", "ShapeError", "enumerate_tableaux", "inversion_vector",
]

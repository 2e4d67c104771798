"""
Exact workbench for the affine Temperley-Lieb algebra T_N(delta): affine diagrams on the cylinder, the
algebra they span, its cell modules with Gram matrices over Laurent polynomials, and the geometry of its
center.

>>> from affinetl import gram_matrix, laurent_det, g_polynomial
>>> laurent_det(gram_matrix(1, 3)) == g_polynomial(1, 3)
True
"""
from __future__ import annotations

from .algebra import (AlgebraElement, DegreeData, degree_data, element_from_factored, in_fan_green_subalgebra,
                      in_filtration_ideal, multiply, star, tau)
from .cellrep import (CellBasis, action_matrices, action_matrix, cell_basis, commutes, element_from_matrix,
                      faithfulness_witness, gram_matrix, pure_component_element, twist_pushing_check,
                      verify_det_identity)
from .center import (CenterElementTL3, GluingReport, SheetPoint, candidate_gluings, confirmed_gluings_tl3,
                     evaluation_vector, gluing_report, hat_matrix, ideal_coordinates, ideal_generators,
                     is_central_tl3, psi_evaluate, sheet_roots, tl3_central_element, variety_summary)
from .diagrams import (AffineDiagram, Arc, ComposeResult, compose, enumerate_standard, factorize, is_monic,
                       is_realizable, make_identity, make_twist, rank, reflect, standardize)
from .laurent import LAURENT_IN_Q, RATIONAL, CoeffDomain, LaurentPoly, complex_domain, delta, eval_complex, x_poly
from .linalg import LaurentMatrix, adjugate, laurent_det
from .polys import d_k, g_polynomial, h_polynomial, p_polynomial, tau_set

__all__ = [
    "AlgebraElement", "DegreeData", "degree_data", "element_from_factored", "in_fan_green_subalgebra",
    "in_filtration_ideal", "multiply", "star", "tau",
    "CellBasis", "action_matrices", "action_matrix", "cell_basis", "commutes", "element_from_matrix",
    "faithfulness_witness", "gram_matrix", "pure_component_element", "twist_pushing_check", "verify_det_identity",
    "CenterElementTL3", "GluingReport", "SheetPoint", "candidate_gluings", "confirmed_gluings_tl3",
    "evaluation_vector", "gluing_report", "hat_matrix", "ideal_coordinates", "ideal_generators", "is_central_tl3",
    "psi_evaluate", "sheet_roots", "tl3_central_element", "variety_summary",
    "AffineDiagram", "Arc", "ComposeResult", "compose", "enumerate_standard", "factorize", "is_monic",
    "is_realizable", "make_identity", "make_twist", "rank", "reflect", "standardize",
    "LAURENT_IN_Q", "RATIONAL", "CoeffDomain", "LaurentPoly", "complex_domain", "delta", "eval_complex", "x_poly",
    "LaurentMatrix", "adjugate", "laurent_det",
    "d_k", "g_polynomial", "h_polynomial", "p_polynomial", "tau_set",
]

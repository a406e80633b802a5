"""Exact stringy E-functions and Euler numbers of klt pairs.

Three independent inputs lead to the same invariants: combinatorial
log-resolution data (:mod:`stringy.strata`), toric fans with a piecewise
linear function (:mod:`stringy.toric`), and finite linear group actions
(:mod:`stringy.grp`). The identity suite in :mod:`stringy.verify` checks
that all routes agree exactly.
"""
from .errors import *  # noqa: F401,F403
from .qalg import (
    FracPoly, RationalExpr, expand_series, expr_add, expr_mul, limit_at_one,
    poly_add, poly_mul,
)
from .strata import (
    ClosedStrataData, StrataData, closed_from_open, open_from_closed, stringy_E,
    stringy_euler, validate_klt,
)
from .syntax import parse_expr, parse_poly, render_expr, render_poly
from .toric import (
    Lattice, PLFunction, SimplicialFan, box_points, cone_mult, divisor_from_pl,
    eval_pl, flip_volume_compare, shed_volume, strata_from_subdivision,
    stringy_E_toric, subdivision_discrepancies,
)
from .subdivide import smooth_subdivide
from .cyclotomic import CycNum
from .grp import (
    GroupElement, MatrixGroup, WeightProfile, abelian_to_toric, blowup_identity_check,
    conjugacy_classes, eigen_alphas, fixed_subspace, group_closure, mckay_table,
    orbifold_E, physicists_euler, ramification_pair,
)

__version__ = "0.1.0"

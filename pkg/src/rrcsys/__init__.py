"""Exact arithmetic for Ramanujan-type systems, Rankin-Cohen brackets and triangle groups."""

from .coeff import QuadExt, sqrt
from .series import PrecisionError, PuiseuxSeries, ValuationError
from .graded import (Derivation, GradedPoly, GradedSpec, RRCSystem, ShapeViolation,
                     canonical_from_rrc, extend_algebra, lowering_operator, parse_poly,
                     parse_system, rrc_shape_check, sl2_check, weight_operator)
from .brackets import canonical_bracket, identity_suite, rc_bracket
from .hypergeom import HGParams, frobenius_pair, hg_series, nome, ohyama_field, qform
from .triangle import (AmbiguousEmbedding, TriangleSignature, candidate_embeddings,
                       dim_pure_weight, dims_table, monomial_basis, multipliers)
from .rrc import (SeriesSolution, build_system, ohyama_roundtrip, solve_q, solve_z,
                  verify_inversion, verify_system)
from .catalog import delta, eisenstein, theta, verify_33, verify_ramanujan

__version__ = "0.1.0"

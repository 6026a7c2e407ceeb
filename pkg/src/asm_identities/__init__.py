"""Exact verification of identities that sum over alternating sign matrices.

Submodules:

* :mod:`~asm_identities.arith`       rationals, Laurent polynomials, sampling
* :mod:`~asm_identities.asm`         ASMs, six-vertex configurations, statistics
* :mod:`~asm_identities.tournaments` tournaments and the tournament/ASM identity
* :mod:`~asm_identities.lambda_det`  the lambda-determinant
* :mod:`~asm_identities.ik`          Izergin-Korepin and its specializations
* :mod:`~asm_identities.cli`         command-line harness
"""

from .arith import LaurentPoly, PolyRing, rand_rational
from .asm import (
    Asm,
    DecoratedAsm,
    SixVertexConfig,
    VertexKind,
    enumerate_asms,
    enumerate_decorated,
    from_six_vertex,
    stats,
    to_six_vertex,
    validate,
)
from .ik import asm_count_formula, ik_lhs, ik_rhs
from .lambda_det import lambda_det_asm_sum, lambda_det_condense
from .report import CheckReport
from .tournaments import Tournament, enumerate_tournaments

__version__ = "0.1.0"

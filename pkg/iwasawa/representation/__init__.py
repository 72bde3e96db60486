from iwasawa.representation.coefficients import (
    CoefficientRelation,
    UnitarityReport,
    coefficient_b,
    coefficient_c,
    coefficient_relation,
    operator_norm_estimate,
    unitarity_report,
)
from iwasawa.representation.functions import OrbitFunction, gaussian, zero
from iwasawa.representation.multiplier import Multiplier
from iwasawa.representation.norms import norm_squared
from iwasawa.representation.operators import (
    apply_group,
    apply_t_n,
    apply_t_s,
    homomorphism_residual,
)

__all__ = [
    "CoefficientRelation",
    "Multiplier",
    "OrbitFunction",
    "UnitarityReport",
    "apply_group",
    "apply_t_n",
    "apply_t_s",
    "coefficient_b",
    "coefficient_c",
    "coefficient_relation",
    "gaussian",
    "homomorphism_residual",
    "norm_squared",
    "operator_norm_estimate",
    "unitarity_report",
    "zero",
]

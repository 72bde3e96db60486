from iwasawa.cocycle.norms import (
    CoboundaryContrast,
    beta_n_norm_closed,
    beta_norm_bound,
    beta_norm_direct,
    beta_s_norm_closed,
    coboundary_contrast,
    f0_divergence,
    multiplier_divergence,
    multiplier_divergence_slope,
    truncated_beta_norm,
    truncation_fit,
)
from iwasawa.cocycle.vectors import (
    SpecialVector,
    beta,
    cocycle_identity_residual,
    probe_points,
)
from iwasawa.cocycle.verdict import (
    CocycleReport,
    Verdict,
    VerdictReport,
    VerdictSummary,
    special_cocycle_verdict,
)

__all__ = [
    "CoboundaryContrast",
    "CocycleReport",
    "SpecialVector",
    "Verdict",
    "VerdictReport",
    "VerdictSummary",
    "beta",
    "beta_n_norm_closed",
    "beta_norm_bound",
    "beta_norm_direct",
    "beta_s_norm_closed",
    "coboundary_contrast",
    "cocycle_identity_residual",
    "f0_divergence",
    "multiplier_divergence",
    "multiplier_divergence_slope",
    "probe_points",
    "special_cocycle_verdict",
    "truncated_beta_norm",
    "truncation_fit",
]

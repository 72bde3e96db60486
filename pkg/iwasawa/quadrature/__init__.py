from iwasawa.quadrature.divergence import divergence_slope, geometric_grid
from iwasawa.quadrature.radial import (
    exponential_tail_bound,
    frullani_check,
    radial_integral,
    radial_integral_vec,
)
from iwasawa.quadrature.spec import DivergenceFit, Estimate, QuadratureSpec, RadialRule
from iwasawa.quadrature.sphere import sphere_integral, sphere_map

__all__ = [
    "DivergenceFit",
    "Estimate",
    "QuadratureSpec",
    "RadialRule",
    "divergence_slope",
    "exponential_tail_bound",
    "frullani_check",
    "geometric_grid",
    "radial_integral",
    "radial_integral_vec",
    "sphere_integral",
    "sphere_map",
]

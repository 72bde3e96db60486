from iwasawa.orbits.basis import SkewBasis, coordinates, from_coordinates, skew_basis
from iwasawa.orbits.classify import (
    Degenerate,
    SignVector,
    action_jacobian,
    classify_orbit,
    factor_orbit_point,
    factor_residual,
    orbit_point,
)
from iwasawa.orbits.sphere import (
    SphereDirection,
    polar_decompose,
    sample_directions,
    sphere_mass,
    sphere_sample,
)

__all__ = [
    "Degenerate",
    "SignVector",
    "SkewBasis",
    "SphereDirection",
    "action_jacobian",
    "classify_orbit",
    "coordinates",
    "factor_orbit_point",
    "factor_residual",
    "from_coordinates",
    "orbit_point",
    "polar_decompose",
    "sample_directions",
    "skew_basis",
    "sphere_mass",
    "sphere_sample",
]

"""Skew-cyclic codes over A_k = F2[v1..vk]/<vi^2 = vi>.

Ring arithmetic, Gray maps, the skew polynomial ring A_k[x, Theta_S], linear
and additive codes with CRT components, and constructions from binary cyclic
codes.
"""

from .codes import (
    AdditiveCode,
    Code,
    check_characterization_1,
    contains,
    crt_decompose,
    dual,
    gray_image,
    gray_min_distance,
    hermitian_product,
    is_quasi_cyclic,
    is_self_dual,
    is_theta_cyclic,
    min_distance,
)
from .constructions import (
    ConstructionError,
    InterleaveMap,
    construct_even,
    construct_from_ap,
    construct_odd,
    cyclic_code,
    lift_generators,
    psi_components,
)
from .gf2 import BinaryCode, DistanceInfeasible
from .gray import (
    BinaryWord,
    IndexPermutation,
    big_sigma_S,
    phi_k,
    phi_k_inverse,
    psi_kp,
    psi_kp_bar,
    psi_kp_inverse,
    sigma_S1,
    sigma_S2,
)
from .ring import (
    GeneralAutomorphism,
    MaximalIdeal,
    RingElement,
    crt_forward,
    crt_inverse,
    maximal_ideals,
    theta_apply,
)
from .skewpoly import SkewPolynomial, parse_poly, theta_shift
from .specfile import CodeSpec

__version__ = "0.1.0"

__all__ = [
    "AdditiveCode", "BinaryCode", "BinaryWord", "Code", "CodeSpec", "ConstructionError",
    "DistanceInfeasible", "GeneralAutomorphism", "IndexPermutation", "InterleaveMap",
    "MaximalIdeal", "RingElement", "SkewPolynomial", "big_sigma_S", "check_characterization_1",
    "construct_even", "construct_from_ap", "construct_odd", "contains", "crt_decompose",
    "crt_forward", "crt_inverse", "cyclic_code", "dual", "gray_image", "gray_min_distance",
    "hermitian_product", "is_quasi_cyclic", "is_self_dual", "is_theta_cyclic", "lift_generators",
    "maximal_ideals", "min_distance", "parse_poly", "phi_k", "phi_k_inverse", "psi_components",
    "psi_kp", "psi_kp_bar", "psi_kp_inverse", "sigma_S1", "sigma_S2", "theta_apply", "theta_shift",
]

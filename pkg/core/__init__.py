from .exceptions import (
    PointProcessError,
    ConfigurationError,
    ArgumentError,
    ModelStateError,
    DataError,
    NumericalError,
)
from .linalg import power_iteration_radius, spectral_radius, left_fixed_point, pseudo_inverse
from .homogeneity import homogeneity_pvalue, chi_squared_pvalue, ks_pvalue

__all__ = [
    "PointProcessError",
    "ConfigurationError",
    "ArgumentError",
    "ModelStateError",
    "DataError",
    "NumericalError",
    "power_iteration_radius",
    "spectral_radius",
    "left_fixed_point",
    "pseudo_inverse",
    "homogeneity_pvalue",
    "chi_squared_pvalue",
    "ks_pvalue",
]

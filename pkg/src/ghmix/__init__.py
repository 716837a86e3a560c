"""Finite mixtures of generalized hyperbolic distributions.

A library and command-line tool for model-based clustering: the
generalized hyperbolic family fitted by an EM algorithm built on the
generalized inverse Gaussian law, with BIC model selection, k-means and
multi-start (emEM) initialization, simulation drivers, and clustering
metrics.
"""

from .bessel import bessel_ratio, dlogk_darg, dlogk_dorder, log_bessel_k
from .errors import (
    DegenerateDenominatorError,
    DomainError,
    EmptyComponentError,
    FitError,
    GhmixError,
    NonFiniteDensityError,
    ParseError,
    SingularMatrixError,
)

__version__ = "0.1.0"

__all__ = [
    "log_bessel_k",
    "bessel_ratio",
    "dlogk_dorder",
    "dlogk_darg",
    "GhmixError",
    "DomainError",
    "SingularMatrixError",
    "ParseError",
    "FitError",
    "NonFiniteDensityError",
    "DegenerateDenominatorError",
    "EmptyComponentError",
    "__version__",
]

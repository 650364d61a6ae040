"""Interval-certified volume bounds for hyperbolic 3-manifolds with genus-2 totally geodesic boundary."""

__version__ = "0.1.0"

from .interval import DomainError, Interval, NumericConfig, get_config, numeric_config  # noqa: E402

__all__ = ["DomainError", "Interval", "NumericConfig", "get_config", "numeric_config", "__version__"]

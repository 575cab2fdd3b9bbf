"""Exact number systems, coordinate planes over them, and configuration checks."""

from .errors import (CapabilityError, DegeneracyError, DomainError,
                     PlanelabError, PrecisionError)
from .scalars import QuadExt, Rational, rational

__all__ = [
    "CapabilityError", "DegeneracyError", "DomainError", "PlanelabError",
    "PrecisionError", "QuadExt", "Rational", "rational",
]

"""Generalized Chebyshev-II polynomials with endpoint point masses.

Exact construction, Bernstein-basis forms, weighted integrals and
least-squares approximation, plus an independent verification layer.
"""
from .bernstein import BernsteinForm
from .genchebyshev import MASS_GRID, GenU, MassParams, gen_u
from .numerics import PiRational
from .polynomial import Domain, Polynomial

__all__ = [
    "BernsteinForm",
    "Domain",
    "GenU",
    "MASS_GRID",
    "MassParams",
    "PiRational",
    "Polynomial",
    "gen_u",
]

__version__ = "0.1.0"

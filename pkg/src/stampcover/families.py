"""Parametric families of bases built from a five-element seed.

The seed family has elements {1, p, p+2, 2p+2, (3p^2 + 3p + 4) / 2} for
odd p >= 3 (odd p keeps the last element an integer).  Extending the
seed by the mirror rules yields symmetric bases with nine or ten
elements whose saturation threshold h1 = p + 1 sits strictly above the
admissibility threshold h0 = p, so they witness that h1 = h0 can fail.
"""

from __future__ import annotations

from .analysis import symmetrize_even, symmetrize_odd
from .core import Basis
from .errors import BadParameterError


def _check_parameter(p: int, minimum: int) -> None:
    if p < minimum:
        raise BadParameterError(f"p must be at least {minimum}, got {p}")
    if p % 2 == 0:
        raise BadParameterError(f"p must be odd, got {p}")


def family_a5(p: int) -> Basis:
    """Five-element seed {1, p, p+2, 2p+2, (3p^2+3p+4)/2}, odd p >= 3."""
    _check_parameter(p, 3)
    tail = (3 * p * p + 3 * p + 4) // 2
    return Basis((1, p, p + 2, 2 * p + 2, tail))


def family_a9(p: int) -> Basis:
    """Nine-element symmetric extension of the seed, odd p >= 3."""
    return symmetrize_odd(family_a5(p))


def family_a10(p: int) -> Basis:
    """Ten-element symmetric extension of the seed, odd p >= 5.

    p = 3 is rejected: the h0 = p, h1 = p + 1 guarantee for the
    ten-element shape only starts at p = 5.  Extending the p = 3 seed
    still yields a valid symmetric basis -- build it directly with
    symmetrize_even to explore it without the family's guarantee.
    """
    _check_parameter(p, 5)
    return symmetrize_even(family_a5(p))

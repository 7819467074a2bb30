"""Intersection multiplicities of affine and projective schemes over Q."""

from ._core import (
    AffineScheme,
    ProjectiveScheme,
    Ring,
    affine_scheme,
    bezout_check,
    degree,
    eliminate,
    naive_multiplicity,
    projective_scheme,
    run_script,
    serre_multiplicity,
    tor_length,
)

__all__ = [
    "AffineScheme",
    "ProjectiveScheme",
    "Ring",
    "affine_scheme",
    "bezout_check",
    "degree",
    "eliminate",
    "naive_multiplicity",
    "projective_scheme",
    "run_script",
    "serre_multiplicity",
    "tor_length",
]

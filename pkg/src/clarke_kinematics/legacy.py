"""Adapters between Clarke coordinates and earlier two-parameter schemes.

Four published segment parameterizations are supported, each an exact linear
image of the Clarke coordinates:

    dian3           n=3  (dx, dy)  = (rho_re, rho_im)
    dellasantina4   n=4  (dx, dy)  = (rho_re, rho_im)
    allen3          n=3  (u, v)    = (-rho_im/d, rho_re/d)
    allen4          n=4  (u, v)    = (-2*rho_im/d, 2*rho_re/d)

The delta schemes are in meters; the (u, v) schemes are dimensionless.  The
sign of u follows the displacement-based derivation of each scheme (actuator
shortening on the positive side of the bending plane), which keeps every
adapter self-inverse.

The schemes were originally published in terms of absolute actuation lengths
l_i; those relate to displacements by l_i = l - rho_i, and any constant
offset such as l is invisible to the Clarke transform.
"""

from __future__ import annotations

import enum
import math
from typing import NamedTuple

import numpy as np

from .core import ClarkeCoords, RobotGeometry, as_displacements, forward_transform


class SchemeMismatchError(ValueError):
    """Scheme applied to a geometry or pair it does not belong to."""


class LegacyScheme(enum.Enum):
    """Tag for one of the published two-parameter schemes."""

    DIAN3 = "dian3"
    DELLA_SANTINA4 = "dellasantina4"
    ALLEN3 = "allen3"
    ALLEN4 = "allen4"

    @property
    def n(self) -> int:
        """Joint count the scheme was published for."""
        return 3 if self in (LegacyScheme.DIAN3, LegacyScheme.ALLEN3) else 4

    @property
    def pair_names(self) -> tuple[str, str]:
        """Column/field names of the scheme's two parameters."""
        if self in (LegacyScheme.DIAN3, LegacyScheme.DELLA_SANTINA4):
            return ("delta_x", "delta_y")
        return ("u", "v")

    @classmethod
    def from_name(cls, name: str) -> "LegacyScheme":
        try:
            return cls(name.strip().lower())
        except ValueError:
            valid = ", ".join(s.value for s in cls)
            raise SchemeMismatchError(f"unknown scheme {name!r}; expected one of {valid}")


class LegacyPair(NamedTuple):
    """A scheme-tagged parameter pair; p1/p2 semantics depend on the scheme."""

    scheme: LegacyScheme
    p1: float
    p2: float


def _check_scheme(scheme: LegacyScheme, geometry: RobotGeometry) -> None:
    if scheme.n != geometry.n:
        raise SchemeMismatchError(
            f"scheme {scheme.value} requires n={scheme.n}, geometry has n={geometry.n}"
        )


def lengths_to_displacements(geometry: RobotGeometry, lengths) -> np.ndarray:
    """Displacements from absolute actuation lengths, rho_i = l - l_i."""
    arr = np.asarray(lengths, dtype=float)
    if arr.shape != (geometry.n,):
        raise ValueError(f"expected {geometry.n} lengths, got shape {arr.shape}")
    return geometry.l - arr


def displacements_to_lengths(geometry: RobotGeometry, rho) -> np.ndarray:
    """Absolute actuation lengths from displacements, l_i = l - rho_i."""
    return geometry.l - as_displacements(geometry, rho)


def legacy_from_clarke(
    scheme: LegacyScheme, geometry: RobotGeometry, clarke
) -> LegacyPair:
    """Convert Clarke coordinates to the scheme's parameter pair."""
    _check_scheme(scheme, geometry)
    re, im = (float(c) for c in np.asarray(clarke, dtype=float))
    d = geometry.d
    if scheme is LegacyScheme.DIAN3 or scheme is LegacyScheme.DELLA_SANTINA4:
        return LegacyPair(scheme, re, im)
    if scheme is LegacyScheme.ALLEN3:
        return LegacyPair(scheme, -im / d, re / d)
    return LegacyPair(scheme, -2.0 * im / d, 2.0 * re / d)


def clarke_from_legacy(
    scheme: LegacyScheme, geometry: RobotGeometry, pair
) -> ClarkeCoords:
    """Convert a scheme's parameter pair back to Clarke coordinates.

    Exact inverse of legacy_from_clarke.  A tagged LegacyPair is checked
    against the requested scheme; a plain (p1, p2) sequence is trusted.
    """
    _check_scheme(scheme, geometry)
    if isinstance(pair, LegacyPair):
        if pair.scheme is not scheme:
            raise SchemeMismatchError(
                f"pair is tagged {pair.scheme.value}, expected {scheme.value}"
            )
        p1, p2 = pair.p1, pair.p2
    else:
        p1, p2 = (float(p) for p in pair)
    d = geometry.d
    if scheme is LegacyScheme.DIAN3 or scheme is LegacyScheme.DELLA_SANTINA4:
        return ClarkeCoords(p1, p2)
    if scheme is LegacyScheme.ALLEN3:
        return ClarkeCoords(p2 * d, -p1 * d)
    return ClarkeCoords(p2 * d / 2.0, -p1 * d / 2.0)


def legacy_from_displacements(
    scheme: LegacyScheme, geometry: RobotGeometry, rho
) -> LegacyPair:
    """Compute the scheme's pair directly from its published joint-value formulas.

    Agrees with legacy_from_clarke(scheme, geometry, forward_transform(rho))
    for every displacement vector; the dedicated formulas are kept as an
    independent route for cross-checking.
    """
    _check_scheme(scheme, geometry)
    arr = as_displacements(geometry, rho)
    d = geometry.d
    if scheme is LegacyScheme.DIAN3:
        dx = (2.0 * arr[0] - arr[1] - arr[2]) / 3.0
        dy = (arr[1] - arr[2]) / math.sqrt(3.0)
        return LegacyPair(scheme, dx, dy)
    if scheme is LegacyScheme.DELLA_SANTINA4:
        return LegacyPair(scheme, (arr[0] - arr[2]) / 2.0, (arr[1] - arr[3]) / 2.0)
    if scheme is LegacyScheme.ALLEN3:
        u = (arr[2] - arr[1]) / (math.sqrt(3.0) * d)
        v = (2.0 * arr[0] - arr[1] - arr[2]) / (3.0 * d)
        return LegacyPair(scheme, u, v)
    return LegacyPair(scheme, (arr[3] - arr[1]) / d, (arr[0] - arr[2]) / d)


def legacy_from_lengths(
    scheme: LegacyScheme, geometry: RobotGeometry, lengths
) -> LegacyPair:
    """The scheme's pair from absolute lengths; offsets common to all l_i cancel."""
    return legacy_from_displacements(
        scheme, geometry, lengths_to_displacements(geometry, lengths)
    )


def clarke_from_lengths(geometry: RobotGeometry, lengths) -> ClarkeCoords:
    """Clarke coordinates from absolute actuation lengths."""
    return forward_transform(geometry, lengths_to_displacements(geometry, lengths))

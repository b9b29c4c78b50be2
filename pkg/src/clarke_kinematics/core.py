"""Generalized Clarke transform for displacement-actuated continuum robots.

An n-joint robot with joints at angles psi_i = 2*pi*(i-1)/n on a cross-section
of radius d has joint displacements rho in R^n that live on a 2-dimensional
subspace.  The 2xn matrix

    M_P = (2/n) [[cos(psi_1) ... cos(psi_n)],
                 [sin(psi_1) ... sin(psi_n)]]

maps displacements to the two Clarke coordinates (rho_re, rho_im); the nx2
right inverse M_P^R = (n/2) * M_P.T maps back.  Both maps are linear and
time-invariant, so they apply unchanged to displacement rates.

All matrices are built once per geometry and cached; transforms are plain
matrix-vector products.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

PSI_TOLERANCE = 1e-12


class GeometryError(ValueError):
    """Invalid kinematic design parameters (n, d, l)."""


class NonSymmetricJointsError(GeometryError):
    """Joint angles deviate from the symmetric arrangement 2*pi*(i-1)/n.

    Only symmetric joint placement is supported; the forward matrix would
    differ for other arrangements, so they are rejected outright.
    """


class ClarkeCoords(NamedTuple):
    """The two free parameters (rho_re, rho_im), in meters."""

    rho_re: float
    rho_im: float


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


def symmetric_joint_angles(n: int) -> np.ndarray:
    """Angles psi_i = 2*pi*(i-1)/n for i = 1..n."""
    return 2.0 * np.pi * np.arange(n) / n


@dataclass(frozen=True, eq=False)
class RobotGeometry:
    """Kinematic design parameters of a single segment.

    n     number of displacement-actuated joints (n >= 3)
    d     offset distance of the joints from the center line [m]
    l     segment length [m]
    psi   joint angles [rad]; derived as 2*pi*(i-1)/n when omitted
    """

    n: int
    d: float
    l: float
    psi: np.ndarray | None = field(default=None)

    def __post_init__(self) -> None:
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise GeometryError(f"joint count must be an integer, got {self.n!r}")
        if self.n < 3:
            raise GeometryError(f"at least 3 joints required, got n={self.n}")
        if not (math.isfinite(self.d) and self.d > 0.0):
            raise GeometryError(f"offset distance must be positive, got d={self.d}")
        if not (math.isfinite(self.l) and self.l > 0.0):
            raise GeometryError(f"segment length must be positive, got l={self.l}")
        expected = symmetric_joint_angles(self.n)
        if self.psi is None:
            psi = expected
        else:
            psi = np.asarray(self.psi, dtype=float)
            if psi.shape != (self.n,):
                raise NonSymmetricJointsError(
                    f"expected {self.n} joint angles, got shape {psi.shape}"
                )
            if not np.allclose(psi, expected, rtol=0.0, atol=PSI_TOLERANCE):
                raise NonSymmetricJointsError(
                    "joint angles are not the symmetric arrangement "
                    "2*pi*(i-1)/n; non-symmetric layouts are not supported"
                )
        object.__setattr__(self, "psi", _readonly(psi.copy()))

    @cached_property
    def clarke(self) -> "ClarkeMatrix":
        forward = (2.0 / self.n) * np.vstack([np.cos(self.psi), np.sin(self.psi)])
        return ClarkeMatrix(
            forward=_readonly(forward),
            right_inverse=_readonly((self.n / 2.0) * forward.T.copy()),
        )

    @cached_property
    def projection(self) -> np.ndarray:
        return _readonly(self.clarke.right_inverse @ self.clarke.forward)


@dataclass(frozen=True, eq=False)
class ClarkeMatrix:
    """Forward (2xn) matrix and its (nx2) right inverse, M_P M_P^R = I."""

    forward: np.ndarray
    right_inverse: np.ndarray


def generic_clarke_matrix(k0: float, k1: float) -> np.ndarray:
    """Three-phase 3x3 Clarke matrix with free parameters k0, k1.

    (k0, k1) = (2/3, 1/2) gives the amplitude-invariant form whose upper
    2x3 block is the n=3 forward matrix; (sqrt(2/3), sqrt(2)/2) gives the
    power-invariant (orthogonal) form.
    """
    s = math.sqrt(3.0) / 2.0
    return k0 * np.array(
        [
            [1.0, -0.5, -0.5],
            [0.0, s, -s],
            [k1, k1, k1],
        ]
    )


def build_clarke_matrix(geometry: RobotGeometry) -> ClarkeMatrix:
    """Forward and right-inverse transformation matrices for a geometry."""
    return geometry.clarke


def as_displacements(geometry: RobotGeometry, rho) -> np.ndarray:
    """Validate and convert a joint-displacement vector to a float array."""
    arr = np.asarray(rho, dtype=float)
    if arr.shape != (geometry.n,):
        raise ValueError(
            f"expected {geometry.n} joint displacements, got shape {arr.shape}"
        )
    return arr


def forward_transform(geometry: RobotGeometry, rho) -> ClarkeCoords:
    """Map joint displacements to Clarke coordinates, rho_clarke = M_P rho.

    Linear and time-invariant: applied to displacement rates it yields
    Clarke-coordinate rates.
    """
    arr = as_displacements(geometry, rho)
    re, im = geometry.clarke.forward @ arr
    return ClarkeCoords(float(re), float(im))


def inverse_transform(geometry: RobotGeometry, clarke) -> np.ndarray:
    """Map Clarke coordinates to joint displacements, rho = M_P^R rho_clarke.

    The result lies in the joint space by construction, so its entries sum
    to zero.  Applied to Clarke-coordinate rates it yields displacement rates.
    """
    vec = np.asarray(clarke, dtype=float)
    if vec.shape != (2,):
        raise ValueError(f"expected 2 Clarke coordinates, got shape {vec.shape}")
    return geometry.clarke.right_inverse @ vec


def projector(geometry: RobotGeometry) -> np.ndarray:
    """The idempotent joint-space projector P = M_P^R M_P.

    P has entries (2/n) cos(psi_i - psi_j), rank 2, trace 2, and filters
    constant vectors to zero.  The returned array is cached and read-only.
    """
    return geometry.projection

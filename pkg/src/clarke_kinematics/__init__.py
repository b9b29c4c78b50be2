"""Clarke-coordinate state parameterization for displacement-actuated continuum robots.

Bidirectional maps between n joint displacements and the two Clarke
coordinates, joint-space projection and sampling, adapters for earlier
two-parameter schemes, and singularity-robust constant-curvature kinematics.
"""

from .core import (
    ClarkeCoords,
    ClarkeMatrix,
    GeometryError,
    NonSymmetricJointsError,
    RobotGeometry,
    build_clarke_matrix,
    forward_transform,
    generic_clarke_matrix,
    inverse_transform,
    projector,
    symmetric_joint_angles,
)
from .joint_space import JointSpaceBasis, basis, contains, project, sample
from .kinematics import (
    ArcParams,
    Pose,
    RegularizationConfig,
    SingularityStrategy,
    StraightConfigurationError,
    arc_from_clarke,
    clarke_from_arc,
    forward_kinematics,
    regularized_magnitude,
)
from .legacy import (
    LegacyPair,
    LegacyScheme,
    SchemeMismatchError,
    clarke_from_legacy,
    clarke_from_lengths,
    displacements_to_lengths,
    legacy_from_clarke,
    legacy_from_displacements,
    legacy_from_lengths,
    lengths_to_displacements,
)

__version__ = "0.1.0"

__all__ = [
    "ArcParams",
    "ClarkeCoords",
    "ClarkeMatrix",
    "GeometryError",
    "JointSpaceBasis",
    "LegacyPair",
    "LegacyScheme",
    "NonSymmetricJointsError",
    "Pose",
    "RegularizationConfig",
    "RobotGeometry",
    "SchemeMismatchError",
    "SingularityStrategy",
    "StraightConfigurationError",
    "arc_from_clarke",
    "basis",
    "build_clarke_matrix",
    "clarke_from_arc",
    "clarke_from_legacy",
    "clarke_from_lengths",
    "contains",
    "displacements_to_lengths",
    "forward_kinematics",
    "forward_transform",
    "generic_clarke_matrix",
    "inverse_transform",
    "legacy_from_clarke",
    "legacy_from_displacements",
    "legacy_from_lengths",
    "lengths_to_displacements",
    "project",
    "projector",
    "regularized_magnitude",
    "sample",
    "symmetric_joint_angles",
    "__version__",
]

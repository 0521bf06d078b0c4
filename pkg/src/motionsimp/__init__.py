"""motionsimp: dance-motion complexity scoring and rule-based simplification."""

__version__ = "0.1.0"

from .kinematics import DerivativeSet, derivatives, pelvis_yaw, yaw_series
from .metrics import (
    ComplexityProfile,
    MetricWeights,
    compute_c1,
    compute_c2,
    compute_c3,
    compute_c4,
    compute_c5,
    compute_profile,
    entropy,
    estimate_contacts,
)
from .pipeline import SimplifyConfig, SimplifyResult, simplify
from .sequence import MotionSequence, load_motion, save_motion
from .skeleton import SkeletonSpec, smpl24
from .trends import (
    ComplexInterval,
    MotionTrend,
    detect_axis_trends,
    detect_intervals,
    detect_trends,
    merge_trends,
)

__all__ = [
    "__version__",
    "ComplexInterval",
    "ComplexityProfile",
    "DerivativeSet",
    "MetricWeights",
    "MotionSequence",
    "MotionTrend",
    "SimplifyConfig",
    "SimplifyResult",
    "SkeletonSpec",
    "compute_c1",
    "compute_c2",
    "compute_c3",
    "compute_c4",
    "compute_c5",
    "compute_profile",
    "derivatives",
    "detect_axis_trends",
    "detect_intervals",
    "detect_trends",
    "entropy",
    "estimate_contacts",
    "load_motion",
    "merge_trends",
    "pelvis_yaw",
    "save_motion",
    "simplify",
    "smpl24",
    "yaw_series",
]

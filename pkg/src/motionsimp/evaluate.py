"""Evaluation metrics: contact plausibility, Frechet feature distance,
diversity, and DTW alignment cost.

The kinetic feature vector (48 values) holds per-joint mean speed and mean
acceleration magnitude. The geometric vector (33 values) holds mean/std of
eleven joint-pair distances, mean/std of five joint heights above the
per-sequence ground level, and the mean pelvis-to-neck torso length.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import _kernels, __version__
from .kinematics import derivatives, rotation_y, yaw_series
from .metrics import estimate_contacts
from .sequence import MotionSequence
from .skeleton import PELVIS

KINETIC_DIM = 48
GEOMETRIC_DIM = 33

_GEO_PAIRS = [
    ("left_wrist", "right_wrist"),
    ("left_ankle", "right_ankle"),
    ("left_wrist", "left_ankle"),
    ("right_wrist", "right_ankle"),
    ("head", "pelvis"),
    ("left_wrist", "pelvis"),
    ("right_wrist", "pelvis"),
    ("left_ankle", "pelvis"),
    ("right_ankle", "pelvis"),
    ("left_elbow", "left_knee"),
    ("right_elbow", "right_knee"),
]
_GEO_HEIGHT_JOINTS = ["pelvis", "head", "left_wrist", "right_wrist", "left_ankle"]


@dataclass(frozen=True)
class FeatureVector:
    kind: str
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=np.float64)
        object.__setattr__(self, "values", vals)
        expected = {"kinetic": KINETIC_DIM, "geometric": GEOMETRIC_DIM}[self.kind]
        if vals.shape != (expected,):
            raise ValueError(f"{self.kind} feature vector must have {expected} values")
        if not np.isfinite(vals).all():
            raise ValueError("non-finite feature value")


@dataclass(frozen=True)
class EvalReport:
    pfc: float
    pbc: float
    fid_k: float | None
    fid_g: float | None
    dist_k: float | None
    dist_g: float | None
    dtw_cost: float
    metadata: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "pfc": self.pfc,
            "pbc": self.pbc,
            "fid_k": self.fid_k,
            "fid_g": self.fid_g,
            "dist_k": self.dist_k,
            "dist_g": self.dist_g,
            "dtw_cost": self.dtw_cost,
            "metadata": {"toolkit_version": __version__, **self.metadata},
        }


def _foot_contacts(seq: MotionSequence) -> np.ndarray:
    return seq.contacts if seq.contacts is not None else estimate_contacts(seq)


def pfc(seq: MotionSequence) -> float:
    """Foot-sliding penalty: mean over frames of summed in-contact foot
    speed, scaled by 100. Zero when grounded feet never move."""
    deriv = derivatives(seq)
    feet = seq.skeleton.groups["feet"]
    speed = np.linalg.norm(deriv.velocity[:, feet], axis=-1)
    contacts = _foot_contacts(seq).astype(np.float64)
    return float(100.0 * (speed * contacts).sum(axis=1).mean())


def pbc(seq: MotionSequence, calibration: float = 0.0) -> float:
    """Whole-body support-phase acceleration score.

    Mean joint acceleration magnitude over frames with any foot contact,
    minus a reference-corpus calibration constant, scaled by 100. Signed so
    "closer to the reference mean is better".
    """
    deriv = derivatives(seq)
    support = _foot_contacts(seq).any(axis=1)
    if not support.any():
        return float(-100.0 * calibration)
    acc = np.linalg.norm(deriv.acceleration, axis=-1).mean(axis=1)
    return float(100.0 * (acc[support].mean() / seq.fps - calibration))


def kinetic_features(seq: MotionSequence) -> FeatureVector:
    """Per-joint mean speed and mean acceleration magnitude (48 values)."""
    deriv = derivatives(seq)
    mean_speed = np.linalg.norm(deriv.velocity, axis=-1).mean(axis=0)
    mean_acc = np.linalg.norm(deriv.acceleration, axis=-1).mean(axis=0)
    return FeatureVector("kinetic", np.concatenate([mean_speed, mean_acc]))


def geometric_features(seq: MotionSequence) -> FeatureVector:
    """Pose-shape statistics (33 values); see module docstring for the list."""
    skel = seq.skeleton
    pos = seq.positions
    values = []
    for a, b in _GEO_PAIRS:
        dist = np.linalg.norm(pos[:, skel.index(a)] - pos[:, skel.index(b)], axis=-1)
        values.extend([dist.mean(), dist.std()])
    feet = skel.groups["feet"]
    ground = pos[:, feet, 1].min()
    for name in _GEO_HEIGHT_JOINTS:
        height = pos[:, skel.index(name), 1] - ground
        values.extend([height.mean(), height.std()])
    torso = np.linalg.norm(pos[:, skel.index("pelvis")] - pos[:, skel.index("neck")], axis=-1)
    values.append(torso.mean())
    return FeatureVector("geometric", np.asarray(values))


def _trace_sqrt_product(cov_a: np.ndarray, cov_b: np.ndarray) -> float:
    w, v = np.linalg.eigh(cov_a)
    sqrt_a = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.T
    eig = np.linalg.eigvalsh(sqrt_a @ cov_b @ sqrt_a)
    return float(np.sqrt(np.clip(eig, 0.0, None)).sum())


def fid(sample_feats: list[FeatureVector], ref_feats: list[FeatureVector]) -> float:
    """Frechet distance between Gaussian fits of two feature populations.

    Negative eigenvalues of the covariance cross-product introduced by
    round-off are clamped to zero, so the result is always >= 0.
    """
    if len(sample_feats) < 2 or len(ref_feats) < 2:
        raise ValueError("need at least 2 feature vectors per side")
    kinds = {f.kind for f in sample_feats} | {f.kind for f in ref_feats}
    if len(kinds) != 1:
        raise ValueError(f"mixed feature kinds {kinds}")
    a = np.stack([f.values for f in sample_feats])
    b = np.stack([f.values for f in ref_feats])
    mu_a, mu_b = a.mean(axis=0), b.mean(axis=0)
    cov_a = np.cov(a, rowvar=False)
    cov_b = np.cov(b, rowvar=False)
    # tr sqrt(cov_a cov_b) via the symmetric form sqrt_a cov_b sqrt_a,
    # averaged over both argument orders so fid(a, b) == fid(b, a) exactly
    trace_sqrt = (_trace_sqrt_product(cov_a, cov_b)
                  + _trace_sqrt_product(cov_b, cov_a)) / 2.0
    value = float(
        np.dot(mu_a - mu_b, mu_a - mu_b)
        + np.trace(cov_a) + np.trace(cov_b) - 2.0 * trace_sqrt
    )
    return max(value, 0.0)


def diversity(feats: list[FeatureVector]) -> float:
    """Mean pairwise Euclidean distance over all unordered pairs."""
    if len(feats) < 2:
        raise ValueError("need at least 2 feature vectors")
    mat = np.stack([f.values for f in feats])
    total = 0.0
    count = 0
    for i in range(len(mat)):
        total += np.linalg.norm(mat[i + 1:] - mat[i], axis=-1).sum()
        count += len(mat) - i - 1
    return float(total / count)


def _normalized_poses(seq: MotionSequence) -> np.ndarray:
    """Root-centered, yaw-aligned, bone-length-normalized poses [F][J][3]."""
    yaw = yaw_series(seq)
    centered = seq.positions - seq.positions[:, PELVIS:PELVIS + 1]
    out = np.empty_like(centered)
    for t in range(seq.num_frames):
        out[t] = centered[t] @ rotation_y(-yaw[t]).T
    parents = np.asarray(seq.skeleton.joint_parents)
    child = np.arange(1, len(parents))
    bones = np.linalg.norm(
        seq.positions[:, child] - seq.positions[:, parents[child]], axis=-1
    )
    scale = bones.mean()
    if scale > 1e-12:
        out = out / scale
    return out


def dtw_cost(a: MotionSequence, b: MotionSequence) -> float:
    """Classic full-matrix DTW over per-frame normalized pose distance."""
    if a.skeleton.joint_names != b.skeleton.joint_names:
        raise ValueError("skeleton mismatch")
    pa = _normalized_poses(a)
    pb = _normalized_poses(b)
    diff = pa[:, None] - pb[None, :]
    dist = np.sqrt((diff ** 2).sum(axis=(2, 3)))
    return float(_kernels.dtw_accumulate(dist))


def evaluate_pair(
    original: MotionSequence,
    simplified: MotionSequence,
    reference: list[MotionSequence] | None = None,
) -> EvalReport:
    """Full report for an original/simplified pair, with FID/diversity
    against a reference corpus when one is given."""
    fid_k = fid_g = dist_k = dist_g = None
    if reference is not None:
        if len(reference) < 2:
            raise ValueError("reference corpus needs at least 2 sequences")
        sample = [simplified]
        kin_s = [kinetic_features(s) for s in sample]
        geo_s = [geometric_features(s) for s in sample]
        kin_r = [kinetic_features(s) for s in reference]
        geo_r = [geometric_features(s) for s in reference]
        # FID needs >= 2 samples per side; duplicate-free pairs only exist
        # at corpus scale, so single pairs reuse original+simplified.
        kin_s = [kinetic_features(original)] + kin_s
        geo_s = [geometric_features(original)] + geo_s
        fid_k = fid(kin_s, kin_r)
        fid_g = fid(geo_s, geo_r)
        dist_k = diversity(kin_r)
        dist_g = diversity(geo_r)
    return EvalReport(
        pfc=pfc(simplified),
        pbc=pbc(simplified),
        fid_k=fid_k,
        fid_g=fid_g,
        dist_k=dist_k,
        dist_g=dist_g,
        dtw_cost=dtw_cost(original, simplified),
    )

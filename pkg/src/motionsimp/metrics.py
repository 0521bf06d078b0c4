"""Five complexity scores (footwork, density, rotation, coordination,
asymmetry) with their frame-wise activation traces."""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .kinematics import (
    DEFAULT_SG_ORDER,
    DEFAULT_SG_WINDOW,
    DerivativeSet,
    derivatives,
    rotation_y,
    sg_smooth,
    yaw_series,
)
from .sequence import MotionSequence
from .skeleton import LEFT_FOOT, PELVIS, RIGHT_FOOT

_SIGMA_FLOOR = 1e-9


@dataclass(frozen=True)
class MetricWeights:
    """Fixed weighting constants for the five complexity scores."""

    c1_entropy: float = 1.5       # alpha1
    c1_range: float = 0.05        # alpha2
    c1_transitions: float = 15.0  # alpha3
    c2_accel: float = 0.005       # beta
    c3_total: float = 0.3         # gamma1
    c3_velocity: float = 1.0      # gamma2
    c3_accel: float = 0.5         # gamma3
    c4_gate: float = 0.01         # delta, m/s
    c5_penalty: float = 0.5       # lambda
    c5_ratio: float = 0.01        # delta
    c5_eps: float = 1e-6          # epsilon
    entropy_bins: int = 10

    def __post_init__(self):
        for name in (
            "c1_entropy", "c1_range", "c1_transitions", "c2_accel",
            "c3_total", "c3_velocity", "c3_accel", "c4_gate",
            "c5_penalty", "c5_ratio", "c5_eps",
        ):
            if not np.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.entropy_bins < 2:
            raise ValueError("entropy_bins must be >= 2")
        if self.c4_gate <= 0 or self.c5_ratio <= 0 or self.c5_eps <= 0:
            raise ValueError("gate thresholds must be positive")


@dataclass(frozen=True)
class ComplexityProfile:
    """Scalar scores plus per-frame activation traces, one per criterion."""

    scores: tuple[float, float, float, float, float]
    activations: dict[str, np.ndarray] = field(repr=False, default_factory=dict)
    weights_used: MetricWeights = field(default_factory=MetricWeights)

    def score(self, criterion: int) -> float:
        """Score for criterion 1..5."""
        return self.scores[criterion - 1]

    def activation(self, criterion: int) -> np.ndarray:
        return self.activations[f"c{criterion}"]


def estimate_contacts(
    seq: MotionSequence, v_thresh: float = 0.15, h_thresh: float = 0.05
) -> np.ndarray:
    """Binary [F][4] foot contacts from foot speed and height above ground.

    A foot joint counts as grounded when its speed stays below ``v_thresh``
    (m/s) and its height above the per-sequence ground level (minimum Y over
    all feet joints) stays below ``h_thresh`` (m).
    """
    feet = seq.skeleton.groups["feet"]
    pos = seq.positions[:, feet]
    vel = np.empty_like(pos)
    vel[:-1] = (pos[1:] - pos[:-1]) * seq.fps
    vel[-1] = vel[-2]
    speed = np.linalg.norm(vel, axis=-1)
    ground = pos[..., 1].min()
    height = pos[..., 1] - ground
    return ((speed < v_thresh) & (height < h_thresh)).astype(np.uint8)


def _contacts(seq: MotionSequence) -> np.ndarray:
    return seq.contacts if seq.contacts is not None else estimate_contacts(seq)


def entropy(values, bins: int = 10) -> float:
    """Shannon entropy (nats) of a histogram over [min, max] uniform bins.

    All-equal inputs occupy a single bin and return 0; empty bins contribute
    0 via the 0*ln(0) := 0 convention.
    """
    values = np.asarray(values, dtype=np.float64).ravel()
    if values.size < 1:
        raise ValueError("entropy needs at least one value")
    lo, hi = values.min(), values.max()
    if hi <= lo:
        return 0.0
    counts, _ = np.histogram(values, bins=bins, range=(lo, hi))
    p = counts[counts > 0] / values.size
    return float(-(p * np.log(p)).sum())


def compute_c1(
    seq: MotionSequence,
    deriv: DerivativeSet,
    weights: MetricWeights = MetricWeights(),
) -> float:
    """Footwork score: mean foot speed + weighted entropy, XZ range, and
    contact transition rate."""
    t = seq.num_frames
    speeds = np.linalg.norm(deriv.velocity[:, (LEFT_FOOT, RIGHT_FOOT)], axis=-1)
    mean_speed = speeds.sum(axis=1).mean()
    ent = entropy(speeds, bins=weights.entropy_bins)
    rng = 0.0
    for foot in (LEFT_FOOT, RIGHT_FOOT):
        xz = seq.positions[:, foot][:, (0, 2)]
        ext = xz.max(axis=0) - xz.min(axis=0)
        rng = max(rng, float(np.hypot(ext[0], ext[1])))
    contacts = _contacts(seq)
    transitions = (contacts[1:] != contacts[:-1]).any(axis=1).sum() / t
    return float(
        mean_speed
        + weights.c1_entropy * ent
        + weights.c1_range * rng
        + weights.c1_transitions * transitions
    )


def _limb_speed_norm(seq: MotionSequence, deriv: DerivativeSet) -> np.ndarray:
    """Per-frame sum over limb joints of speed / per-joint speed std-dev."""
    limbs = seq.skeleton.groups["limbs"]
    speeds = np.linalg.norm(deriv.velocity[:, limbs], axis=-1)
    sigma = speeds.std(axis=0)
    scaled = np.where(sigma > _SIGMA_FLOOR, speeds / np.where(sigma > 0, sigma, 1.0), 0.0)
    return scaled.sum(axis=1)


def compute_c2(
    seq: MotionSequence,
    deriv: DerivativeSet,
    weights: MetricWeights = MetricWeights(),
) -> float:
    """Movement-density score: normalized limb speed plus median smoothed
    acceleration magnitude over interior frames."""
    term1 = _limb_speed_norm(seq, deriv).mean()
    limbs = seq.skeleton.groups["limbs"]
    acc = np.linalg.norm(deriv.acceleration[1:-1, limbs], axis=-1)
    term2 = weights.c2_accel * float(np.median(acc))
    return float(term1 + term2)


def _filtered_yaw(seq: MotionSequence, sg_window: int, sg_order: int):
    raw = np.unwrap(yaw_series(seq))
    return raw, sg_smooth(raw, sg_window, sg_order)


def compute_c3(
    seq: MotionSequence,
    weights: MetricWeights = MetricWeights(),
    sg_window: int = DEFAULT_SG_WINDOW,
    sg_order: int = DEFAULT_SG_ORDER,
) -> float:
    """Rotation score: normalized net turn plus mean yaw velocity and
    acceleration magnitudes of the smoothed, unwrapped yaw series."""
    raw, smooth = _filtered_yaw(seq, sg_window, sg_order)
    total = np.abs(raw[-1] - raw[0]) % (2.0 * np.pi)
    dyaw = np.diff(smooth)
    d2yaw = np.diff(dyaw)
    accel = float(np.abs(d2yaw).mean()) if d2yaw.size else 0.0
    return float(
        weights.c3_total * total / np.pi
        + weights.c3_velocity * np.abs(dyaw).mean()
        + weights.c3_accel * accel
    )


def _intensities(seq: MotionSequence, deriv: DerivativeSet):
    upper = seq.skeleton.groups["upper"]
    lower = seq.skeleton.groups["lower"]
    i_upper = np.linalg.norm(deriv.velocity[:, upper], axis=-1).mean(axis=1)
    i_lower = np.linalg.norm(deriv.velocity[:, lower], axis=-1).mean(axis=1)
    return i_upper, i_lower


def compute_c4(
    seq: MotionSequence,
    deriv: DerivativeSet,
    weights: MetricWeights = MetricWeights(),
) -> float:
    """Coordination score: variance of upper-lower intensity difference,
    gated on both halves actually moving."""
    i_upper, i_lower = _intensities(seq, deriv)
    if min(i_upper.mean(), i_lower.mean()) <= weights.c4_gate:
        return 0.0
    return float(np.var(i_upper - i_lower))


def _local_frame(seq: MotionSequence) -> np.ndarray:
    """Positions in a pelvis-centered frame rotated so facing is +Z."""
    yaw = yaw_series(seq)
    centered = seq.positions - seq.positions[:, PELVIS:PELVIS + 1]
    out = np.empty_like(centered)
    for t in range(seq.num_frames):
        out[t] = centered[t] @ rotation_y(-yaw[t]).T
    return out


def _asymmetry_trace(
    seq: MotionSequence, deriv: DerivativeSet, weights: MetricWeights
):
    """Per-frame bilateral asymmetry score and the dominance velocities."""
    pairs = seq.skeleton.paired
    left = [l for l, _ in pairs]
    right = [r for _, r in pairs]
    speed_l = np.linalg.norm(deriv.velocity[:, left], axis=-1)
    speed_r = np.linalg.norm(deriv.velocity[:, right], axis=-1)
    fspeed_l = np.linalg.norm(deriv.filtered_velocity[:, left], axis=-1)
    fspeed_r = np.linalg.norm(deriv.filtered_velocity[:, right], axis=-1)

    local = _local_frame(seq)
    mirrored_r = local[:, right].copy()
    mirrored_r[..., 0] = -mirrored_r[..., 0]
    dpos = np.linalg.norm(local[:, left] - mirrored_r, axis=-1)
    dvel = np.abs(speed_l - speed_r)

    pair_mean = (fspeed_l + fspeed_r).mean(axis=0) / 2.0
    inv = 1.0 / (pair_mean + weights.c5_eps)
    w = inv / inv.sum()

    a_t = ((dvel + 0.5 * dpos) * w).sum(axis=1)
    v_l = float(fspeed_l.sum())
    v_r = float(fspeed_r.sum())
    return a_t, v_l, v_r


def compute_c5(
    seq: MotionSequence,
    deriv: DerivativeSet,
    weights: MetricWeights = MetricWeights(),
) -> float:
    """Bilateral-asymmetry score with a one-side-dominance penalty factor."""
    a_t, v_l, v_r = _asymmetry_trace(seq, deriv, weights)
    ratio = min(v_l, v_r) / (max(v_l, v_r) + weights.c5_eps)
    penalty = 1.0 + weights.c5_penalty * (ratio < weights.c5_ratio)
    return float(a_t.mean() * penalty)


def compute_profile(
    seq: MotionSequence,
    weights: MetricWeights = MetricWeights(),
    sg_window: int = DEFAULT_SG_WINDOW,
    sg_order: int = DEFAULT_SG_ORDER,
) -> ComplexityProfile:
    """All five scores plus their frame-wise activation traces.

    Activations are the frame-local integrands of each score: summed foot
    speed, normalized limb speed, |yaw delta|, |intensity difference|, and
    the per-frame asymmetry score.
    """
    if seq.contacts is None:
        seq = replace(seq, contacts=estimate_contacts(seq))
    deriv = derivatives(seq, sg_window, sg_order)
    f = seq.num_frames

    foot_speed = np.linalg.norm(deriv.velocity[:, (LEFT_FOOT, RIGHT_FOOT)], axis=-1)
    m1 = foot_speed.sum(axis=1)
    m2 = _limb_speed_norm(seq, deriv)
    _, smooth_yaw = _filtered_yaw(seq, sg_window, sg_order)
    m3 = np.empty(f)
    m3[:-1] = np.abs(np.diff(smooth_yaw))
    m3[-1] = m3[-2]
    i_upper, i_lower = _intensities(seq, deriv)
    m4 = np.abs(i_upper - i_lower)
    m5, _, _ = _asymmetry_trace(seq, deriv, weights)

    scores = (
        compute_c1(seq, deriv, weights),
        compute_c2(seq, deriv, weights),
        compute_c3(seq, weights, sg_window, sg_order),
        compute_c4(seq, deriv, weights),
        compute_c5(seq, deriv, weights),
    )
    activations = {"c1": m1, "c2": m2, "c3": m3, "c4": m4, "c5": m5}
    return ComplexityProfile(scores=scores, activations=activations, weights_used=weights)


def profile_to_dict(profile: ComplexityProfile) -> dict:
    """JSON-ready profile payload."""
    out = {f"c{i}": profile.scores[i - 1] for i in range(1, 6)}
    out["activations"] = {k: v.tolist() for k, v in profile.activations.items()}
    return out


def analysis_to_dict(seq: MotionSequence, profile: ComplexityProfile) -> dict:
    """Profile payload plus sequence metadata; shared by the CLI analyze
    output and the service profile endpoint so both emit identical JSON."""
    out = profile_to_dict(profile)
    out["fps"] = seq.fps
    out["frames"] = seq.num_frames
    out["skeleton"] = {
        "joint_names": list(seq.skeleton.joint_names),
        "joint_parents": list(seq.skeleton.joint_parents),
    }
    return out

"""Full rule-based simplification pipeline with accept-if-improved guards."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .kinematics import DEFAULT_SG_ORDER, DEFAULT_SG_WINDOW
from .metrics import ComplexityProfile, MetricWeights, compute_profile
from .rules import (
    directional_change,
    distance_compression,
    orientation_stabilization,
    velocity_reduction,
)
from .sequence import MotionSequence
from .trends import ComplexInterval, detect_intervals, detect_trends, wrist_flip_vector

DEFAULT_EPS = 0.2
DEFAULT_ALPHA = 0.5
DEFAULT_TAU_PERCENTILE = 75.0
DEFAULT_MIN_LEN_SECONDS = 0.25


@dataclass(frozen=True)
class SimplifyConfig:
    """Tunable knobs of the simplification pipeline.

    ``tau`` and ``min_len`` entries left as None fall back to the 75th
    percentile of the sequence's own activation trace and to 0.25 s worth of
    frames respectively. ``psi_target=None`` means "face where the interval
    started".
    """

    epsilon: float = DEFAULT_EPS
    alpha: float = DEFAULT_ALPHA
    tau: tuple[float | None, ...] = (None, None, None, None, None)
    min_len: tuple[int | None, ...] = (None, None, None, None, None)
    k: float = 0.5
    lambda_slow: int = 2
    psi_target: float | None = None
    flip_vector: tuple[int, int, int] = (-1, 1, 1)
    criteria_enabled: tuple[bool, bool, bool, bool, bool] = (True,) * 5
    sg_window: int = DEFAULT_SG_WINDOW
    sg_order: int = DEFAULT_SG_ORDER
    weights: MetricWeights = field(default_factory=MetricWeights)

    def __post_init__(self):
        if not 0.0 <= self.k <= 1.0:
            raise ValueError("k must be in [0, 1]")
        if self.lambda_slow < 2:
            raise ValueError("lambda_slow must be >= 2")
        if len(self.tau) != 5 or len(self.min_len) != 5 or len(self.criteria_enabled) != 5:
            raise ValueError("tau, min_len, criteria_enabled must have 5 entries")
        if any(t is not None and not np.isfinite(t) for t in self.tau):
            raise ValueError("tau entries must be finite")
        if any(m is not None and m < 2 for m in self.min_len):
            raise ValueError("min_len entries must be >= 2")
        if any(v not in (-1, 1) for v in self.flip_vector):
            raise ValueError("flip vector entries must be -1 or +1")
        if not self.epsilon > 0:
            raise ValueError("epsilon must be positive")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must be in (0, 1]")


@dataclass(frozen=True)
class StageRecord:
    """What one pipeline stage did: attempted, accepted, on which intervals."""

    criterion: int
    attempted: bool
    accepted: bool
    intervals: tuple[ComplexInterval, ...]
    score_before: float
    score_after: float | None


@dataclass(frozen=True)
class SimplifyResult:
    motion: MotionSequence
    before: ComplexityProfile
    after: ComplexityProfile
    applied: tuple[StageRecord, ...]


def _resolve_tau(config: SimplifyConfig, profile: ComplexityProfile, criterion: int) -> float:
    configured = config.tau[criterion - 1]
    if configured is not None:
        return configured
    return float(np.percentile(profile.activation(criterion), DEFAULT_TAU_PERCENTILE))


def _resolve_min_len(config: SimplifyConfig, fps: float, criterion: int) -> int:
    configured = config.min_len[criterion - 1]
    if configured is not None:
        return configured
    return max(2, round(DEFAULT_MIN_LEN_SECONDS * fps))


def simplify(seq: MotionSequence, config: SimplifyConfig = SimplifyConfig()) -> SimplifyResult:
    """Apply the five rules in fixed criterion order, committing each stage
    only when it strictly lowers its targeted score.

    Motion trends are detected once on the input; activation intervals are
    re-detected per stage on the current working sequence.
    """
    profile = compute_profile(seq, config.weights, config.sg_window, config.sg_order)
    before = profile
    working = seq
    scores = list(profile.scores)
    trends = detect_trends(seq, config.epsilon, config.alpha)
    records = []

    for criterion in range(1, 6):
        tau = _resolve_tau(config, profile, criterion)
        if not config.criteria_enabled[criterion - 1] or scores[criterion - 1] <= tau:
            records.append(StageRecord(criterion, False, False, (), scores[criterion - 1], None))
            continue
        working_profile = compute_profile(
            working, config.weights, config.sg_window, config.sg_order
        )
        min_len = _resolve_min_len(config, seq.fps, criterion)
        intervals = detect_intervals(working, working_profile, criterion, tau, min_len, trends)
        if not intervals:
            records.append(StageRecord(criterion, False, False, (), scores[criterion - 1], None))
            continue
        candidate = _apply_rule(working, criterion, intervals, config, trends)
        new_profile = compute_profile(
            candidate, config.weights, config.sg_window, config.sg_order
        )
        new_score = new_profile.scores[criterion - 1]
        accepted = new_score < scores[criterion - 1]
        records.append(
            StageRecord(
                criterion, True, accepted, tuple(intervals),
                scores[criterion - 1], new_score,
            )
        )
        if accepted:
            working = candidate
            scores = list(new_profile.scores)

    after = compute_profile(working, config.weights, config.sg_window, config.sg_order)
    return SimplifyResult(motion=working, before=before, after=after, applied=tuple(records))


def _apply_rule(
    working: MotionSequence,
    criterion: int,
    intervals: list[ComplexInterval],
    config: SimplifyConfig,
    trends,
) -> MotionSequence:
    if criterion == 1:
        return velocity_reduction(working, intervals, config.lambda_slow)
    if criterion in (2, 4):
        return distance_compression(working, intervals, config.k)
    if criterion == 3:
        return orientation_stabilization(working, intervals, config.psi_target)
    # bilateral asymmetry: per-interval flip vector from wrist trends when a
    # disagreeing overlapping pair exists, else the configured vector
    out = working
    for iv in intervals:
        flip = wrist_flip_vector(trends, iv.start, iv.end, config.alpha)
        if flip is None:
            flip = config.flip_vector
        out = directional_change(out, [iv], flip)
    return out


def result_to_dict(result: SimplifyResult, motion_path: str | None = None) -> dict:
    """JSON payload for a simplification run (before/after profiles and the
    per-stage record)."""
    from .metrics import profile_to_dict

    payload = {
        "before": profile_to_dict(result.before),
        "after": profile_to_dict(result.after),
        "applied": [
            {
                "criterion": rec.criterion,
                "attempted": rec.attempted,
                "accepted": rec.accepted,
                "score_before": rec.score_before,
                "score_after": rec.score_after,
                "intervals": [
                    {"s": iv.start, "e": iv.end, "joints": list(iv.joints)}
                    for iv in rec.intervals
                ],
            }
            for rec in result.applied
        ],
    }
    if motion_path is not None:
        payload["motion_path"] = motion_path
    return payload

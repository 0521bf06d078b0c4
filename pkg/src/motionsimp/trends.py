"""Monotonic motion-trend detection, sweep-line merging across axes, and
high-activation interval location."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .metrics import ComplexityProfile
from .sequence import MotionSequence
from .skeleton import LEFT_WRIST, RIGHT_WRIST


@dataclass(frozen=True)
class MotionTrend:
    """One monotonic motion event: joint, inclusive frame span, and the
    per-axis summed sign indicator vector."""

    joint: int
    start: int
    end: int
    direction: tuple[int, int, int]

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError(f"bad trend span [{self.start}, {self.end}]")


@dataclass(frozen=True)
class ComplexInterval:
    """A high-activation frame span (inclusive) with its target joint set."""

    criterion: int
    start: int
    end: int
    joints: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.criterion <= 5:
            raise ValueError("criterion must be 1..5")
        if not self.joints:
            raise ValueError("target joint set must be non-empty")
        if not 0 <= self.start < self.end:
            raise ValueError(f"bad interval span [{self.start}, {self.end}]")


def detect_axis_trends(
    seq: MotionSequence, joint: int, axis: int, eps: float
) -> list[MotionTrend]:
    """Maximal runs of consistently signed per-frame displacement on one axis.

    Steps with |displacement| < ``eps`` count as jitter and break runs.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    series = seq.positions[:, joint, axis]
    delta = np.diff(series)
    signs = np.where(delta >= eps, 1, np.where(delta <= -eps, -1, 0))
    trends = []
    run_start = 0
    for t in range(1, len(signs) + 1):
        if t == len(signs) or signs[t] != signs[run_start]:
            if signs[run_start] != 0:
                direction = [0, 0, 0]
                direction[axis] = int(signs[run_start])
                trends.append(
                    MotionTrend(joint=joint, start=run_start, end=t, direction=tuple(direction))
                )
            run_start = t
    return trends


def overlap_ratio(s1: int, e1: int, s2: int, e2: int) -> float:
    """Span overlap length over the shorter span length."""
    inter = min(e1, e2) - max(s1, s2)
    if inter <= 0:
        return 0.0
    return inter / min(e1 - s1, e2 - s2)


def _merge_once(
    trends: list[MotionTrend], alpha: float
) -> tuple[list[MotionTrend], bool]:
    """One start-sorted sweep over a single joint's trends with eviction of
    actives ending before the incoming start.

    Merges the first qualifying (active, incoming) pair into a span-union,
    direction-sum trend and stops, so cascaded merges are re-examined on a
    fresh sweep. Returns (trends, merged_flag).
    """
    ordered = sorted(trends, key=lambda t: (t.start, t.end))
    active: list[int] = []
    for k, tr in enumerate(ordered):
        active = [i for i in active if ordered[i].end >= tr.start]
        for i in active:
            prev = ordered[i]
            if overlap_ratio(prev.start, prev.end, tr.start, tr.end) >= alpha:
                merged = MotionTrend(
                    joint=tr.joint,
                    start=min(prev.start, tr.start),
                    end=max(prev.end, tr.end),
                    direction=tuple(
                        a + b for a, b in zip(prev.direction, tr.direction)
                    ),
                )
                rest = [ordered[j] for j in range(len(ordered)) if j not in (i, k)]
                return rest + [merged], True
        active.append(k)
    return ordered, False


def merge_trends(axis_trends: list[MotionTrend], alpha: float) -> list[MotionTrend]:
    """Merge temporally overlapping axis trends of each joint.

    Sweeps repeat until a fixed point so the operation is idempotent and
    input-order insensitive; merged spans are unions and direction vectors
    are summed. Trends whose summed direction cancels to zero are dropped.
    """
    if not 0 < alpha <= 1:
        raise ValueError("alpha must be in (0, 1]")
    by_joint: dict[int, list[MotionTrend]] = {}
    for tr in axis_trends:
        by_joint.setdefault(tr.joint, []).append(tr)
    out = []
    for joint in sorted(by_joint):
        current = by_joint[joint]
        merged = True
        while merged:
            current, merged = _merge_once(current, alpha)
        out.extend(tr for tr in current if any(tr.direction))
    return sorted(out, key=lambda t: (t.joint, t.start, t.end))


def detect_trends(seq: MotionSequence, eps: float, alpha: float) -> list[MotionTrend]:
    """Axis-trend detection over every joint and axis, then sweep merging."""
    axis_trends = []
    for joint in range(seq.positions.shape[1]):
        for axis in range(3):
            axis_trends.extend(detect_axis_trends(seq, joint, axis, eps))
    return merge_trends(axis_trends, alpha)


def select_target_joints(
    seq: MotionSequence,
    criterion: int,
    trends: list[MotionTrend],
    start: int,
    end: int,
) -> tuple[int, ...]:
    """Joint set a simplification rule edits inside one interval.

    Footwork targets both leg chains; density targets limb chains with a
    trend overlapping the interval by >= 50% (all limb chains when none
    does); rotation targets the whole body; coordination targets the busier
    body half; asymmetry targets the right-arm chain.
    """
    skel = seq.skeleton
    chains = skel.chains
    if criterion == 1:
        return chains["left_leg"] + chains["right_leg"]
    if criterion == 2:
        limb_chains = ["left_leg", "right_leg", "left_arm", "right_arm"]
        picked: list[int] = []
        for name in limb_chains:
            chain = chains[name]
            hit = any(
                tr.joint in chain and overlap_ratio(tr.start, tr.end, start, end) >= 0.5
                for tr in trends
            )
            if hit:
                picked.extend(chain)
        if not picked:
            for name in limb_chains:
                picked.extend(chains[name])
        return tuple(picked)
    if criterion == 3:
        return tuple(range(len(skel.joint_names)))
    if criterion == 4:
        pos = seq.positions[start:end + 1]
        vel = np.diff(pos, axis=0) * seq.fps
        upper_speed = np.linalg.norm(vel[:, skel.groups["upper"]], axis=-1).mean()
        lower_speed = np.linalg.norm(vel[:, skel.groups["lower"]], axis=-1).mean()
        if upper_speed >= lower_speed:
            return chains["left_arm"] + chains["right_arm"]
        return chains["left_leg"] + chains["right_leg"]
    if criterion == 5:
        return chains["right_arm"]
    raise ValueError(f"criterion {criterion} out of range")


def detect_intervals(
    seq: MotionSequence,
    profile: ComplexityProfile,
    criterion: int,
    tau: float,
    min_len: int,
    trends: list[MotionTrend],
) -> list[ComplexInterval]:
    """Maximal activation runs above ``tau`` spanning at least ``min_len``
    frames (end - start >= min_len, inclusive ends)."""
    if min_len < 2:
        raise ValueError("min_len must be >= 2")
    active = profile.activation(criterion) > tau
    intervals = []
    run_start = None
    for f in range(len(active) + 1):
        if f < len(active) and active[f]:
            if run_start is None:
                run_start = f
        elif run_start is not None:
            end = f - 1
            if end - run_start >= min_len:
                joints = select_target_joints(seq, criterion, trends, run_start, end)
                intervals.append(
                    ComplexInterval(criterion=criterion, start=run_start, end=end, joints=joints)
                )
            run_start = None
    return intervals


def wrist_flip_vector(
    trends: list[MotionTrend], start: int, end: int, alpha: float
) -> tuple[int, int, int] | None:
    """Flip vector from disagreeing left/right wrist trends in a window.

    Returns None when no sufficiently overlapping wrist trend pair exists;
    otherwise flips exactly the axes whose direction signs disagree.
    """
    left = [t for t in trends if t.joint == LEFT_WRIST
            and overlap_ratio(t.start, t.end, start, end) > 0]
    right = [t for t in trends if t.joint == RIGHT_WRIST
             and overlap_ratio(t.start, t.end, start, end) > 0]
    best = None
    best_ratio = 0.0
    for lt in left:
        for rt in right:
            r = overlap_ratio(lt.start, lt.end, rt.start, rt.end)
            if r >= alpha and r > best_ratio:
                best, best_ratio = (lt, rt), r
    if best is None:
        return None
    lt, rt = best
    flip = []
    for axis in range(3):
        a, b = lt.direction[axis], rt.direction[axis]
        flip.append(-1 if a * b < 0 else 1)
    if all(v == 1 for v in flip):
        return None
    return tuple(flip)

"""The five simplification rules plus the two post-processing corrections
(root reattachment and boundary-offset smoothing)."""

from __future__ import annotations

import numpy as np

from . import _kernels
from .kinematics import rotation_y, yaw_series
from .sequence import MotionSequence
from .skeleton import PELVIS
from .trends import ComplexInterval


def _chains_for(seq: MotionSequence, joints: tuple[int, ...]) -> list[list[int]]:
    """Split a target joint set into per-limb chains, root first.

    Joints outside every limb chain (torso/head, the whole-body case) are
    left out; reattachment operates per chain.
    """
    jset = set(joints)
    out = []
    for chain in seq.skeleton.chains.values():
        sub = [j for j in chain if j in jset]
        if sub:
            out.append(sub)
    return out


def reattach_chain(
    orig: np.ndarray, gen: np.ndarray, chain: list[int], start: int, end: int
) -> None:
    """Translate chain joints so the chain root matches ``orig`` per frame.

    Mutates ``gen`` in place over the inclusive frame span.
    """
    root = chain[0]
    delta = orig[start:end + 1, root] - gen[start:end + 1, root]
    gen[start:end + 1, chain] += delta[:, None, :]
    # pin the root exactly: += delta is only inverse up to rounding
    gen[start:end + 1, root] = orig[start:end + 1, root]


def reattach_root(
    orig: MotionSequence, gen: MotionSequence, chain: list[int], interval
) -> MotionSequence:
    """Root-locking reattachment of one chain over an inclusive interval."""
    start, end = interval
    out = gen.positions.copy()
    reattach_chain(orig.positions, out, list(chain), start, end)
    return gen.with_positions(out)


def smooth_joint_tail(
    orig: np.ndarray, gen: np.ndarray, joint: int, boundary: int
) -> None:
    """Shift frames after ``boundary`` by a sign-guarded decaying offset.

    The offset starts as the boundary-frame gap between original and
    generated positions and shrinks per axis only while the original motion
    moves against it, clipping at zero instead of overshooting. Mutates
    ``gen`` in place.
    """
    f = orig.shape[0]
    if boundary >= f - 1:
        return
    offset = orig[boundary, joint] - gen[boundary, joint]
    steps = orig[boundary + 1:, joint] - orig[boundary:-1, joint]
    applied = _kernels.offset_decay(offset, steps)
    gen[boundary + 1:, joint] -= applied


def smooth_discontinuity(
    orig: MotionSequence, gen: MotionSequence, joints, boundary: int
) -> MotionSequence:
    """Boundary-pop smoothing for every joint in ``joints``."""
    out = gen.positions.copy()
    for j in joints:
        smooth_joint_tail(orig.positions, out, j, boundary)
    return gen.with_positions(out)


def _postprocess(
    src: np.ndarray,
    gen: np.ndarray,
    seq: MotionSequence,
    joints: tuple[int, ...],
    start: int,
    end: int,
) -> None:
    all_joints = len(joints) == seq.positions.shape[1]
    if not all_joints:
        for chain in _chains_for(seq, joints):
            reattach_chain(src, gen, chain, start, end)
    for j in joints:
        smooth_joint_tail(src, gen, j, end)


def distance_compression(
    seq: MotionSequence, intervals: list[ComplexInterval], k: float
) -> MotionSequence:
    """Scale per-frame displacements of target joints by ``k`` in [0, 1]."""
    if not 0.0 <= k <= 1.0:
        raise ValueError("k must be in [0, 1]")
    gen = seq.positions.copy()
    for iv in intervals:
        src = gen.copy()
        joints = list(iv.joints)
        steps = np.diff(src[iv.start:iv.end + 1, joints], axis=0)
        gen[iv.start + 1:iv.end + 1, joints] = (
            src[iv.start, joints] + k * np.cumsum(steps, axis=0)
        )
        _postprocess(src, gen, seq, iv.joints, iv.start, iv.end)
    return seq.with_positions(gen)


def velocity_reduction(
    seq: MotionSequence, intervals: list[ComplexInterval], slowdown: int
) -> MotionSequence:
    """Stretch each interval step into ``slowdown`` interpolated sub-steps
    within the fixed timeline; intervals whose stretched endpoint would pass
    the end of the sequence are skipped."""
    if slowdown < 2 or int(slowdown) != slowdown:
        raise ValueError("slowdown must be an integer >= 2")
    slowdown = int(slowdown)
    f = seq.num_frames
    gen = seq.positions.copy()
    for iv in intervals:
        end_new = iv.start + (iv.end - iv.start) * slowdown
        if end_new >= f:
            continue
        src = gen.copy()
        joints = list(iv.joints)
        for step in range(iv.end - iv.start):
            a = src[iv.start + step][joints]
            b = src[iv.start + step + 1][joints]
            for i in range(slowdown):
                gen[iv.start + step * slowdown + i, joints] = a + (i / slowdown) * (b - a)
        gen[end_new, joints] = src[iv.end, joints]
        _postprocess(src, gen, seq, iv.joints, iv.start, end_new)
    return seq.with_positions(gen)


def directional_change(
    seq: MotionSequence,
    intervals: list[ComplexInterval],
    flip_vector: tuple[int, int, int],
) -> MotionSequence:
    """Re-accumulate displacements from the interval anchor with selected
    axes sign-flipped; per-axis step magnitudes are preserved."""
    if any(v not in (-1, 1) for v in flip_vector):
        raise ValueError("flip vector entries must be -1 or +1")
    flip = np.asarray(flip_vector, dtype=np.float64)
    gen = seq.positions.copy()
    for iv in intervals:
        src = gen.copy()
        joints = list(iv.joints)
        steps = np.diff(src[iv.start:iv.end + 1, joints], axis=0) * flip
        gen[iv.start + 1:iv.end + 1, joints] = (
            src[iv.start, joints] + np.cumsum(steps, axis=0)
        )
        _postprocess(src, gen, seq, iv.joints, iv.start, iv.end)
    return seq.with_positions(gen)


def orientation_stabilization(
    seq: MotionSequence,
    intervals: list[ComplexInterval],
    psi_target: float | None,
) -> MotionSequence:
    """Rotate the whole skeleton about the pelvis so facing matches the
    target yaw on every frame of each interval.

    ``psi_target=None`` targets the yaw at each interval's first frame.
    """
    gen = seq.positions.copy()
    yaw = yaw_series(seq)
    for iv in intervals:
        target = yaw[iv.start] if psi_target is None else float(psi_target)
        for f in range(iv.start, iv.end + 1):
            pelvis = gen[f, PELVIS].copy()
            rot = rotation_y(target - yaw[f])
            gen[f] = (gen[f] - pelvis) @ rot.T + pelvis
    return seq.with_positions(gen)

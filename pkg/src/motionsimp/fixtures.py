"""Deterministic synthetic motion generators for tests, demos, and the CLI.

Each generator keys off a plausible standing template pose (meters, Y up,
facing +Z, left side toward +X) and returns a MotionSequence.
"""

from __future__ import annotations

import numpy as np

from .sequence import MotionSequence
from .skeleton import smpl24

DEFAULT_FPS = 60.0
DEFAULT_FRAMES = 180

_TEMPLATE = {
    "pelvis": (0.0, 0.95, 0.0),
    "left_hip": (0.1, 0.9, 0.0),
    "right_hip": (-0.1, 0.9, 0.0),
    "spine1": (0.0, 1.05, 0.0),
    "left_knee": (0.1, 0.5, 0.0),
    "right_knee": (-0.1, 0.5, 0.0),
    "spine2": (0.0, 1.15, 0.0),
    "left_ankle": (0.1, 0.1, 0.0),
    "right_ankle": (-0.1, 0.1, 0.0),
    "spine3": (0.0, 1.25, 0.0),
    "left_foot": (0.1, 0.0, 0.12),
    "right_foot": (-0.1, 0.0, 0.12),
    "neck": (0.0, 1.4, 0.0),
    "left_collar": (0.07, 1.35, 0.0),
    "right_collar": (-0.07, 1.35, 0.0),
    "head": (0.0, 1.55, 0.0),
    "left_shoulder": (0.2, 1.35, 0.0),
    "right_shoulder": (-0.2, 1.35, 0.0),
    "left_elbow": (0.45, 1.35, 0.0),
    "right_elbow": (-0.45, 1.35, 0.0),
    "left_wrist": (0.7, 1.35, 0.0),
    "right_wrist": (-0.7, 1.35, 0.0),
    "left_hand": (0.8, 1.35, 0.0),
    "right_hand": (-0.8, 1.35, 0.0),
}


def template_pose() -> np.ndarray:
    skel = smpl24()
    return np.array([_TEMPLATE[name] for name in skel.joint_names])


def static(frames: int = DEFAULT_FRAMES, fps: float = DEFAULT_FPS) -> MotionSequence:
    """Motionless standing pose; every complexity score is zero."""
    pos = np.tile(template_pose(), (frames, 1, 1))
    return MotionSequence(pos, fps, smpl24())


def walker(
    frames: int = DEFAULT_FRAMES,
    fps: float = DEFAULT_FPS,
    stride: float = 0.5,
    step_frames: int = 30,
):
    """Forward walk with alternating steps and a known contact schedule.

    Stance feet stay planted while the body drifts forward; each swing
    advances its foot by ``stride`` with a sinusoidal lift. Ankles sit low
    enough to register as grounded when planted. Returns (sequence,
    contacts) where contacts is the [F][4] ground truth the generator
    enforced.
    """
    skel = smpl24()
    pos = np.tile(template_pose(), (frames, 1, 1))
    left = [skel.index("left_ankle"), skel.index("left_foot")]
    right = [skel.index("right_ankle"), skel.index("right_foot")]
    feet = left + right
    pos[:, (left[0], right[0]), 1] = 0.02
    contacts = np.ones((frames, 4), dtype=np.uint8)
    t = np.arange(frames)
    body = [j for j in range(24) if j not in feet]
    pos[:, body, 2] += (stride / (2 * step_frames) * t)[:, None]

    for start in range(0, frames - step_frames, 2 * step_frames):
        for side, cols in ((left, (0, 2)), (right, (1, 3))):
            lo = start if side is left else start + step_frames
            hi = lo + step_frames
            if hi > frames:
                continue
            phase = np.linspace(0.0, np.pi, hi - lo)
            lift = 0.12 * np.sin(phase)
            swing = stride * (1 - np.cos(phase)) / 2
            pos[lo:hi, side, 1] += lift[:, None]
            pos[lo:hi, side, 2] += swing[:, None]
            pos[hi:, side, 2] += swing[-1]
            # airborne from actual liftoff to touchdown; the lookahead
            # matches forward-difference velocity seen at the frame before
            airborne = lift > 1e-9
            airborne[:-1] |= airborne[1:]
            for c in cols:
                contacts[lo:hi, c] = (~airborne).astype(np.uint8)
    return MotionSequence(pos, fps, skel, contacts), contacts


def spinner(
    frames: int = DEFAULT_FRAMES,
    fps: float = DEFAULT_FPS,
    turns: float = 1.0,
) -> MotionSequence:
    """Whole body spinning about the vertical axis at constant rate."""
    base = template_pose()
    pelvis = base[0].copy()
    pos = np.empty((frames, 24, 3))
    for f in range(frames):
        angle = 2.0 * np.pi * turns * f / (frames - 1)
        c, s = np.cos(angle), np.sin(angle)
        rot = np.array([[c, 0, s], [0, 1, 0], [-s, 0, c]])
        pos[f] = (base - pelvis) @ rot.T + pelvis
    return MotionSequence(pos, fps, smpl24())


def mirror_wave(
    frames: int = DEFAULT_FRAMES, fps: float = DEFAULT_FPS, amp: float = 0.25
) -> MotionSequence:
    """Both arms waving in mirror symmetry; bilateral asymmetry stays zero."""
    skel = smpl24()
    pos = np.tile(template_pose(), (frames, 1, 1))
    t = np.arange(frames)
    wave_y = amp * np.sin(2 * np.pi * t / 45)
    wave_z = 0.5 * amp * np.sin(2 * np.pi * t / 60)
    for side in ("left", "right"):
        for name, scale in (("_elbow", 0.5), ("_wrist", 1.0), ("_hand", 1.1)):
            j = skel.index(side + name)
            pos[:, j, 1] += scale * wave_y
            pos[:, j, 2] += scale * wave_z
    return MotionSequence(pos, fps, skel)


def asymmetric_arms(
    frames: int = DEFAULT_FRAMES, fps: float = DEFAULT_FPS, amp: float = 0.3
) -> MotionSequence:
    """Left arm waving, right side static; one-sided dominance fixture."""
    skel = smpl24()
    pos = np.tile(template_pose(), (frames, 1, 1))
    t = np.arange(frames)
    wave = amp * np.sin(2 * np.pi * t / 40)
    for name, scale in (("left_elbow", 0.5), ("left_wrist", 1.0), ("left_hand", 1.1)):
        j = skel.index(name)
        pos[:, j, 1] += scale * wave
        pos[:, j, 2] += scale * 0.4 * wave
    return MotionSequence(pos, fps, skel)


def dense_shaker(
    frames: int = DEFAULT_FRAMES,
    fps: float = DEFAULT_FPS,
    amp: float = 0.2,
    seed: int = 0,
) -> MotionSequence:
    """All limbs oscillating fast; high movement-density fixture."""
    skel = smpl24()
    rng = np.random.default_rng(seed)
    pos = np.tile(template_pose(), (frames, 1, 1))
    t = np.arange(frames)
    for j in skel.groups["limbs"]:
        for axis in range(3):
            period = rng.integers(8, 16)
            phase = rng.uniform(0, 2 * np.pi)
            pos[:, j, axis] += amp * np.sin(2 * np.pi * t / period + phase)
    return MotionSequence(pos, fps, skel)


def desync(
    frames: int = DEFAULT_FRAMES,
    fps: float = DEFAULT_FPS,
    amp: float = 0.2,
    synchronized: bool = False,
) -> MotionSequence:
    """Upper and lower body taking turns moving (or moving together when
    ``synchronized``); exercises the coordination score."""
    skel = smpl24()
    pos = np.tile(template_pose(), (frames, 1, 1))
    t = np.arange(frames)
    wave = amp * np.sin(2 * np.pi * t / 20)
    gate_upper = (np.sin(2 * np.pi * t / 80) > 0).astype(float)
    gate_lower = gate_upper if synchronized else 1.0 - gate_upper
    upper_wave = np.cumsum(np.gradient(wave) * gate_upper)
    lower_wave = np.cumsum(np.gradient(wave) * gate_lower)
    for j in skel.groups["upper"]:
        pos[:, j, 0] += upper_wave
    for j in (skel.index("left_knee"), skel.index("right_knee"),
              skel.index("left_ankle"), skel.index("right_ankle"),
              skel.index("left_foot"), skel.index("right_foot")):
        pos[:, j, 2] += lower_wave
    return MotionSequence(pos, fps, skel)


def random_motion(
    rng: np.random.Generator,
    frames: int = 120,
    fps: float = DEFAULT_FPS,
    amp: float = 0.15,
    with_contacts: bool = False,
) -> MotionSequence:
    """Smooth random motion around the template; oracle-test workhorse."""
    pos = np.tile(template_pose(), (frames, 1, 1))
    noise = rng.normal(scale=amp, size=(frames, 24, 3))
    kernel = np.ones(7) / 7.0
    for j in range(24):
        for a in range(3):
            smooth = np.convolve(noise[:, j, a], kernel, mode="same")
            pos[:, j, a] += np.cumsum(smooth) * 0.2
    contacts = None
    if with_contacts:
        contacts = (rng.random((frames, 4)) < 0.7).astype(np.uint8)
    return MotionSequence(pos, fps, smpl24(), contacts)


GENERATORS = {
    "static": lambda seed: static(),
    "walker": lambda seed: walker()[0],
    "spinner": lambda seed: spinner(),
    "mirror": lambda seed: mirror_wave(),
    "asymmetric-arms": lambda seed: asymmetric_arms(),
    "dense-shaker": lambda seed: dense_shaker(seed=seed),
    "desync": lambda seed: desync(),
    "sync": lambda seed: desync(synchronized=True),
    "random": lambda seed: random_motion(np.random.default_rng(seed)),
}


def generate(kind: str, seed: int = 0) -> MotionSequence:
    try:
        return GENERATORS[kind](seed)
    except KeyError:
        raise ValueError(f"unknown fixture kind {kind!r}; options: {sorted(GENERATORS)}")

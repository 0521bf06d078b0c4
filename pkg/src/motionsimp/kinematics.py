"""Velocity/acceleration computation, Savitzky-Golay smoothing, pelvis yaw."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.signal import savgol_filter

from .sequence import MotionSequence
from .skeleton import LEFT_HIP, RIGHT_HIP

DEFAULT_SG_WINDOW = 9
DEFAULT_SG_ORDER = 3

_DEGENERATE_XZ = 1e-9


@dataclass(frozen=True)
class DerivativeSet:
    """Per-frame velocity (m/s), filtered velocity, and acceleration (m/s^2).

    All three arrays match the source sequence shape [F][J][3]. Velocity is
    a forward difference scaled by fps with the last row repeated;
    acceleration is the second difference of the filtered velocity scaled by
    fps, with both boundary rows replicated from their nearest interior row.
    """

    velocity: np.ndarray
    acceleration: np.ndarray
    filtered_velocity: np.ndarray


def _check_sg(window: int, order: int) -> None:
    if window % 2 == 0 or window <= order or order < 1:
        raise ValueError(f"need odd window > order >= 1, got window={window} order={order}")


def sg_smooth(series: np.ndarray, window: int, order: int, axis: int = 0) -> np.ndarray:
    """Savitzky-Golay smoothing along ``axis``.

    The window is shrunk (keeping it odd) when the series is shorter than
    ``window``; if it cannot stay above ``order`` the series is returned
    unchanged.
    """
    _check_sg(window, order)
    n = series.shape[axis]
    if n < window:
        window = n if n % 2 == 1 else n - 1
        if window <= order:
            return np.asarray(series, dtype=np.float64)
    return savgol_filter(series, window, order, axis=axis, mode="interp")


def derivatives(
    seq: MotionSequence,
    sg_window: int = DEFAULT_SG_WINDOW,
    sg_order: int = DEFAULT_SG_ORDER,
) -> DerivativeSet:
    """Compute raw velocity, SG-filtered velocity, and acceleration."""
    _check_sg(sg_window, sg_order)
    pos = seq.positions
    f = pos.shape[0]
    if f < sg_window:
        raise ValueError(f"sequence has {f} frames, needs >= sg_window={sg_window}")
    vel = np.empty_like(pos)
    vel[:-1] = (pos[1:] - pos[:-1]) * seq.fps
    vel[-1] = vel[-2]
    fvel = sg_smooth(vel, sg_window, sg_order, axis=0)
    acc = np.empty_like(pos)
    acc[1:-1] = (fvel[2:] - 2.0 * fvel[1:-1] + fvel[:-2]) * seq.fps
    acc[0] = acc[1]
    acc[-1] = acc[-2]
    return DerivativeSet(velocity=vel, acceleration=acc, filtered_velocity=fvel)


def facing_from_hips(hip_delta: np.ndarray) -> np.ndarray:
    """XZ facing direction perpendicular to the inter-hip vector.

    ``hip_delta`` is left_hip - right_hip, shape [...,3]; the result is the
    (x, z) facing components such that hips spread along +X face +Z.
    """
    return np.stack([-hip_delta[..., 2], hip_delta[..., 0]], axis=-1)


def yaw_series(seq: MotionSequence) -> np.ndarray:
    """Pelvis yaw per frame, in (-pi, pi].

    Yaw 0 faces +Z; a global rotation by phi about Y adds phi. Frames whose
    hip projection onto XZ is degenerate carry the previous frame's yaw
    forward (frame 0 degenerates to yaw 0).
    """
    delta = seq.positions[:, LEFT_HIP] - seq.positions[:, RIGHT_HIP]
    facing = facing_from_hips(delta)
    yaw = np.arctan2(facing[:, 0], facing[:, 1])
    degenerate = np.hypot(facing[:, 0], facing[:, 1]) < _DEGENERATE_XZ
    if degenerate.any():
        yaw = yaw.copy()
        prev = 0.0
        for t in range(len(yaw)):
            if degenerate[t]:
                yaw[t] = prev
            else:
                prev = yaw[t]
    return yaw


def pelvis_yaw(seq: MotionSequence, t: int) -> float:
    """Pelvis yaw (radians) at frame ``t``."""
    if not 0 <= t < seq.num_frames:
        raise IndexError(f"frame {t} out of range")
    return float(yaw_series(seq)[t])


def rotation_y(angle: float) -> np.ndarray:
    """Right-handed rotation matrix about the Y axis."""
    c, s = np.cos(angle), np.sin(angle)
    return np.array([[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]])

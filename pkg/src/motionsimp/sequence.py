"""Motion sequence container and file I/O (motion-JSON and motion-BIN).

motion-JSON layout::

    {"fps": number, "joints": [24 names], "frames": [[[x,y,z] x 24] x F],
     "contacts": [[c,c,c,c] x F]}        # contacts optional

motion-BIN layout (little endian)::

    magic "MSMP" | u32 version=1 | u32 F | u32 J | f64 fps
    | F*J*3 f64 positions | u8 contact flag | (flag=1) F*4 u8 contacts
"""

from __future__ import annotations

import json
import struct
from dataclasses import dataclass

import numpy as np

from .skeleton import SkeletonSpec, smpl24

_MAGIC = b"MSMP"
_BIN_VERSION = 1


class MotionFormatError(ValueError):
    """Malformed motion file or invariant-violating payload."""


@dataclass(frozen=True)
class MotionSequence:
    """World-space joint positions [F][24][3] in meters, Y up, plus fps.

    ``contacts`` is an optional [F][4] binary foot-contact array ordered as
    (left ankle, right ankle, left foot, right foot).
    """

    positions: np.ndarray
    fps: float
    skeleton: SkeletonSpec
    contacts: np.ndarray | None = None

    def __post_init__(self):
        pos = np.asarray(self.positions, dtype=np.float64)
        object.__setattr__(self, "positions", pos)
        if pos.ndim != 3 or pos.shape[1] != 24 or pos.shape[2] != 3:
            raise MotionFormatError(f"positions must be [F][24][3], got {pos.shape}")
        if pos.shape[0] < 2:
            raise MotionFormatError("sequence needs at least 2 frames")
        if not np.isfinite(pos).all():
            raise MotionFormatError("non-finite joint position")
        if not self.fps > 0:
            raise MotionFormatError("fps must be positive")
        if self.contacts is not None:
            c = np.asarray(self.contacts, dtype=np.uint8)
            if c.shape != (pos.shape[0], 4):
                raise MotionFormatError(f"contacts must be [F][4], got {c.shape}")
            if not np.isin(c, (0, 1)).all():
                raise MotionFormatError("contacts must be binary")
            object.__setattr__(self, "contacts", c)
        self.positions.setflags(write=False)
        if self.contacts is not None:
            self.contacts.setflags(write=False)

    @property
    def num_frames(self) -> int:
        return self.positions.shape[0]

    @property
    def duration(self) -> float:
        return self.num_frames / self.fps

    def with_positions(self, positions: np.ndarray) -> "MotionSequence":
        return MotionSequence(positions, self.fps, self.skeleton, self.contacts)


def to_dict(seq: MotionSequence) -> dict:
    """Serialize a sequence to the motion-JSON object layout."""
    out = {
        "fps": seq.fps,
        "joints": list(seq.skeleton.joint_names),
        "frames": seq.positions.tolist(),
    }
    if seq.contacts is not None:
        out["contacts"] = seq.contacts.astype(int).tolist()
    return out


def from_dict(data: dict, skeleton: SkeletonSpec | None = None) -> MotionSequence:
    """Build a sequence from a motion-JSON object, validating all invariants."""
    if not isinstance(data, dict):
        raise MotionFormatError("motion-JSON root must be an object")
    try:
        fps = float(data["fps"])
        joints = data["joints"]
        frames = np.asarray(data["frames"], dtype=np.float64)
    except (KeyError, TypeError, ValueError) as exc:
        raise MotionFormatError(f"malformed motion-JSON: {exc}") from exc
    if len(joints) != 24:
        raise MotionFormatError(f"expected 24 joint names, got {len(joints)}")
    contacts = data.get("contacts")
    if contacts is not None:
        contacts = np.asarray(contacts)
    return MotionSequence(frames, fps, skeleton or smpl24(), contacts)


def load_motion(path, skeleton: SkeletonSpec | None = None) -> MotionSequence:
    """Load a motion-JSON or motion-BIN file (format sniffed from the magic)."""
    with open(path, "rb") as fh:
        head = fh.read(4)
        rest = fh.read()
    if head == _MAGIC:
        return _decode_bin(head + rest, skeleton)
    try:
        data = json.loads((head + rest).decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise MotionFormatError(f"cannot parse {path}: {exc}") from exc
    return from_dict(data, skeleton)


def save_motion(seq: MotionSequence, path, format: str = "json") -> None:
    """Write ``seq`` to ``path`` as motion-JSON or motion-BIN."""
    if format == "json":
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(to_dict(seq), fh)
    elif format == "bin":
        with open(path, "wb") as fh:
            fh.write(_encode_bin(seq))
    else:
        raise ValueError(f"unknown format {format!r}")


def _encode_bin(seq: MotionSequence) -> bytes:
    f, j = seq.positions.shape[:2]
    parts = [
        _MAGIC,
        struct.pack("<IIId", _BIN_VERSION, f, j, seq.fps),
        seq.positions.astype("<f8").tobytes(),
    ]
    if seq.contacts is None:
        parts.append(b"\x00")
    else:
        parts.append(b"\x01")
        parts.append(seq.contacts.astype(np.uint8).tobytes())
    return b"".join(parts)


def _decode_bin(blob: bytes, skeleton: SkeletonSpec | None) -> MotionSequence:
    header = struct.calcsize("<IIId")
    if len(blob) < 4 + header:
        raise MotionFormatError("truncated motion-BIN header")
    version, f, j, fps = struct.unpack_from("<IIId", blob, 4)
    if version != _BIN_VERSION:
        raise MotionFormatError(f"unsupported motion-BIN version {version}")
    off = 4 + header
    nbytes = f * j * 3 * 8
    if len(blob) < off + nbytes + 1:
        raise MotionFormatError("truncated motion-BIN payload")
    positions = np.frombuffer(blob, dtype="<f8", count=f * j * 3, offset=off)
    positions = positions.reshape(f, j, 3).copy()
    off += nbytes
    flag = blob[off]
    off += 1
    contacts = None
    if flag == 1:
        if len(blob) < off + f * 4:
            raise MotionFormatError("truncated contact block")
        contacts = np.frombuffer(blob, dtype=np.uint8, count=f * 4, offset=off)
        contacts = contacts.reshape(f, 4).copy()
    elif flag != 0:
        raise MotionFormatError(f"bad contact flag {flag}")
    return MotionSequence(positions, fps, skeleton or smpl24(), contacts)

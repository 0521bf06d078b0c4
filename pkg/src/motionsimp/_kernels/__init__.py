"""Kernel selection: compiled extension when built, pure fallback otherwise."""

try:
    from ._ckernels import dtw_accumulate, offset_decay

    COMPILED = True
except ImportError:  # pragma: no cover - depends on build environment
    from ._fallback import dtw_accumulate, offset_decay

    COMPILED = False

__all__ = ["dtw_accumulate", "offset_decay", "COMPILED"]

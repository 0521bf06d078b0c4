import contextlib
import dataclasses
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from motionsimp import fixtures
from motionsimp.metrics import estimate_contacts

_ACCEPTANCE: list[tuple[str, bool]] = []


@contextlib.contextmanager
def criterion(name: str):
    """Record one acceptance criterion outcome for the terminal summary."""
    try:
        yield
    except BaseException:
        _ACCEPTANCE.append((name, False))
        raise
    _ACCEPTANCE.append((name, True))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for name, ok in _ACCEPTANCE:
        terminalreporter.write_line(f"  {'PASS' if ok else 'FAIL'}: {name}")


def seeded_sequence(seed: int, min_frames: int = 30, max_frames: int = 300):
    """Random smooth sequence with contacts resolved, frames in range."""
    rng = np.random.default_rng(seed)
    frames = int(rng.integers(min_frames, max_frames + 1))
    seq = fixtures.random_motion(rng, frames=frames, with_contacts=bool(seed % 2))
    if seq.contacts is None:
        seq = dataclasses.replace(seq, contacts=estimate_contacts(seq))
    return seq


@pytest.fixture
def tmp_motion(tmp_path):
    """A small motion-JSON file on disk plus its sequence."""
    from motionsimp.sequence import save_motion

    seq = fixtures.random_motion(np.random.default_rng(11), frames=40)
    path = tmp_path / "clip.json"
    save_motion(seq, path, "json")
    return path, seq

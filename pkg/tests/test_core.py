"""Sequence container, file formats, skeleton tables, and kinematics."""

import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from motionsimp import fixtures
from motionsimp.kinematics import (
    derivatives,
    facing_from_hips,
    pelvis_yaw,
    rotation_y,
    sg_smooth,
    yaw_series,
)
from motionsimp.sequence import (
    MotionFormatError,
    MotionSequence,
    _encode_bin,
    from_dict,
    load_motion,
    save_motion,
    to_dict,
)
from motionsimp.skeleton import (
    LEFT_FOOT,
    LEFT_HIP,
    PELVIS,
    RIGHT_FOOT,
    RIGHT_HIP,
    SMPL24_PARENTS,
    SkeletonSpec,
    smpl24,
)

from oracles import savgol_naive, velocity_naive


class TestSkeleton:
    def test_layout_tables(self):
        skel = smpl24()
        assert list(skel.joint_parents) == SMPL24_PARENTS
        assert skel.joint_names[PELVIS] == "pelvis"
        assert skel.joint_names[LEFT_HIP] == "left_hip"
        assert skel.joint_names[RIGHT_HIP] == "right_hip"
        assert skel.joint_names[LEFT_FOOT] == "left_foot"
        assert skel.joint_names[RIGHT_FOOT] == "right_foot"
        assert skel.groups["feet"] == (7, 8, 10, 11)
        assert set(skel.groups["limbs"]) == set(skel.groups["upper"]) | {4, 5, 7, 8, 10, 11}
        assert len(skel.paired) == 6
        for left, right in skel.paired:
            assert skel.joint_names[left].replace("left", "right") == skel.joint_names[right]

    def test_chains_are_paths(self):
        skel = smpl24()
        for chain in skel.chains.values():
            for child, parent in zip(chain[1:], chain):
                assert skel.joint_parents[child] == parent

    def test_rejects_forest(self):
        parents = list(SMPL24_PARENTS)
        parents[5] = -1
        with pytest.raises(ValueError):
            SkeletonSpec(tuple(smpl24().joint_names), tuple(parents))

    def test_rejects_bad_chain(self):
        skel = smpl24()
        with pytest.raises(ValueError):
            SkeletonSpec(
                skel.joint_names, skel.joint_parents, chains={"bad": (1, 7)}
            )


class TestSequence:
    def test_basic_invariants(self):
        seq = fixtures.static(frames=10)
        assert seq.num_frames == 10
        assert seq.duration == pytest.approx(10 / 60.0)
        assert not seq.positions.flags.writeable

    def test_rejects_bad_shapes(self):
        with pytest.raises(MotionFormatError):
            MotionSequence(np.zeros((5, 23, 3)), 30.0, smpl24())
        with pytest.raises(MotionFormatError):
            MotionSequence(np.zeros((1, 24, 3)), 30.0, smpl24())
        with pytest.raises(MotionFormatError):
            MotionSequence(np.zeros((5, 24, 3)), 0.0, smpl24())
        bad = np.zeros((5, 24, 3))
        bad[2, 3, 1] = np.nan
        with pytest.raises(MotionFormatError):
            MotionSequence(bad, 30.0, smpl24())

    def test_rejects_bad_contacts(self):
        pos = np.zeros((5, 24, 3))
        with pytest.raises(MotionFormatError):
            MotionSequence(pos, 30.0, smpl24(), np.zeros((4, 4)))
        with pytest.raises(MotionFormatError):
            MotionSequence(pos, 30.0, smpl24(), np.full((5, 4), 2))

    def test_dict_round_trip(self):
        seq = fixtures.walker(frames=20, step_frames=8)[0]
        again = from_dict(to_dict(seq))
        np.testing.assert_array_equal(seq.positions, again.positions)
        np.testing.assert_array_equal(seq.contacts, again.contacts)
        assert seq.fps == again.fps


class TestFileFormats:
    def test_json_round_trip(self, tmp_path):
        seq = fixtures.walker(frames=20, step_frames=8)[0]
        path = tmp_path / "walk.json"
        save_motion(seq, path, "json")
        again = load_motion(path)
        np.testing.assert_array_equal(seq.positions, again.positions)
        np.testing.assert_array_equal(seq.contacts, again.contacts)

    def test_bin_round_trip_bit_exact(self, tmp_path):
        seq = fixtures.random_motion(np.random.default_rng(5), frames=17)
        path = tmp_path / "clip.bin"
        save_motion(seq, path, "bin")
        again = load_motion(path)
        assert seq.positions.tobytes() == again.positions.tobytes()
        save_motion(again, tmp_path / "clip2.bin", "bin")
        assert path.read_bytes() == (tmp_path / "clip2.bin").read_bytes()

    def test_bin_header_layout(self):
        seq = fixtures.static(frames=3)
        blob = _encode_bin(seq)
        # magic + version/F/J u32s + fps f64 + payload + contact flag
        assert blob[:4] == b"MSMP"
        assert len(blob) == 4 + 12 + 8 + 3 * 24 * 3 * 8 + 1
        assert blob[-1] == 0

    def test_bin_with_contacts(self, tmp_path):
        seq = fixtures.walker(frames=20, step_frames=8)[0]
        path = tmp_path / "walk.bin"
        save_motion(seq, path, "bin")
        again = load_motion(path)
        np.testing.assert_array_equal(seq.contacts, again.contacts)

    def test_truncated_bin_rejected(self, tmp_path):
        seq = fixtures.static(frames=3)
        blob = _encode_bin(seq)
        path = tmp_path / "bad.bin"
        path.write_bytes(blob[:40])
        with pytest.raises(MotionFormatError):
            load_motion(path)

    def test_bad_json_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        with pytest.raises(MotionFormatError):
            load_motion(path)
        path.write_text(json.dumps({"fps": 30, "joints": ["a"], "frames": []}))
        with pytest.raises(MotionFormatError):
            load_motion(path)


class TestKinematics:
    def test_velocity_matches_naive(self):
        seq = fixtures.random_motion(np.random.default_rng(2), frames=50)
        d = derivatives(seq)
        np.testing.assert_allclose(
            d.velocity, velocity_naive(seq.positions, seq.fps), rtol=0, atol=0
        )

    def test_filtered_velocity_matches_naive(self):
        seq = fixtures.random_motion(np.random.default_rng(3), frames=40)
        d = derivatives(seq)
        vel = velocity_naive(seq.positions, seq.fps)
        for j in (0, 10, 20):
            exp = savgol_naive(vel[:, j, 0], 9, 3)
            np.testing.assert_allclose(d.filtered_velocity[:, j, 0], exp, rtol=1e-9)

    def test_acceleration_boundaries_replicated(self):
        seq = fixtures.random_motion(np.random.default_rng(4), frames=30)
        d = derivatives(seq)
        np.testing.assert_array_equal(d.acceleration[0], d.acceleration[1])
        np.testing.assert_array_equal(d.acceleration[-1], d.acceleration[-2])

    def test_short_sequence_rejected(self):
        seq = fixtures.static(frames=5)
        with pytest.raises(ValueError):
            derivatives(seq, sg_window=9)

    def test_sg_parameter_validation(self):
        with pytest.raises(ValueError):
            sg_smooth(np.zeros(20), 8, 3)
        with pytest.raises(ValueError):
            sg_smooth(np.zeros(20), 9, 0)
        with pytest.raises(ValueError):
            sg_smooth(np.zeros(20), 3, 3)

    def test_sg_short_series_shrinks_window(self):
        series = np.arange(5.0) ** 2
        out = sg_smooth(series, 9, 3)
        assert out.shape == series.shape
        # degree-3 window over 5 points reproduces a quadratic exactly
        np.testing.assert_allclose(out, series, atol=1e-9)

    @given(st.integers(min_value=0, max_value=10_000))
    @settings(max_examples=25, deadline=None)
    def test_sg_preserves_cubics(self, seed):
        rng = np.random.default_rng(seed)
        coeff = rng.normal(size=4)
        x = np.arange(41, dtype=np.float64)
        series = np.polyval(coeff, x / 40.0)
        out = sg_smooth(series, 9, 3)
        np.testing.assert_allclose(out, series, atol=1e-8)

    def test_yaw_of_template_is_zero(self):
        seq = fixtures.static(frames=5)
        assert abs(pelvis_yaw(seq, 0)) < 1e-12

    def test_global_rotation_adds_yaw(self):
        base = fixtures.static(frames=5)
        for phi in (0.3, -1.2, 2.9):
            rotated = base.with_positions(base.positions @ rotation_y(phi).T)
            got = pelvis_yaw(rotated, 0)
            assert abs((got - phi + np.pi) % (2 * np.pi) - np.pi) < 1e-12

    def test_degenerate_hips_carry_yaw_forward(self):
        pos = fixtures.static(frames=6).positions.copy()
        pos[3:, LEFT_HIP] = pos[3:, RIGHT_HIP]  # hips collapse from frame 3
        pos[:3] = pos[:3] @ rotation_y(0.7).T
        seq = MotionSequence(pos, 60.0, smpl24())
        yaw = yaw_series(seq)
        np.testing.assert_allclose(yaw[3:], yaw[2], atol=1e-12)

    def test_degenerate_first_frame_is_zero(self):
        pos = fixtures.static(frames=4).positions.copy()
        pos[0, LEFT_HIP] = pos[0, RIGHT_HIP]
        seq = MotionSequence(pos, 60.0, smpl24())
        assert yaw_series(seq)[0] == 0.0

    def test_facing_perpendicular_to_hips(self):
        delta = np.array([0.3, 0.0, 0.4])
        facing = facing_from_hips(delta)
        assert abs(facing[0] * delta[0] + facing[1] * delta[2]) < 1e-12

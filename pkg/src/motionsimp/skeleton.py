"""24-joint skeleton layout tables (SMPL-24 joint order, pelvis-rooted)."""

from __future__ import annotations

from dataclasses import dataclass, field


SMPL24_JOINT_NAMES = [
    "pelvis",
    "left_hip",
    "right_hip",
    "spine1",
    "left_knee",
    "right_knee",
    "spine2",
    "left_ankle",
    "right_ankle",
    "spine3",
    "left_foot",
    "right_foot",
    "neck",
    "left_collar",
    "right_collar",
    "head",
    "left_shoulder",
    "right_shoulder",
    "left_elbow",
    "right_elbow",
    "left_wrist",
    "right_wrist",
    "left_hand",
    "right_hand",
]

SMPL24_PARENTS = [
    -1, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 9, 12, 13, 14, 16, 17, 18, 19, 20, 21,
]


@dataclass(frozen=True)
class SkeletonSpec:
    """Joint layout: names, parent tree, named joint groups and limb chains.

    ``groups`` maps group names to joint index tuples; ``paired`` lists
    (left, right) index pairs; ``chains`` maps limb names to root-first
    ordered joint index tuples.
    """

    joint_names: tuple[str, ...]
    joint_parents: tuple[int, ...]
    groups: dict[str, tuple[int, ...]] = field(default_factory=dict)
    paired: tuple[tuple[int, int], ...] = ()
    chains: dict[str, tuple[int, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if len(self.joint_names) != 24 or len(self.joint_parents) != 24:
            raise ValueError("skeleton must have exactly 24 joints")
        roots = [i for i, p in enumerate(self.joint_parents) if p < 0]
        if roots != [0]:
            raise ValueError("parent table must form a tree rooted at the pelvis")
        for i, p in enumerate(self.joint_parents[1:], start=1):
            if not 0 <= p < 24 or p == i:
                raise ValueError(f"invalid parent {p} for joint {i}")
        for left, right in self.paired:
            if left == right:
                raise ValueError("paired entry with identical left/right index")
        for name, chain in self.chains.items():
            for child, parent in zip(chain[1:], chain):
                if self.joint_parents[child] != parent:
                    raise ValueError(f"chain {name!r} is not a path in the parent tree")

    def index(self, name: str) -> int:
        return self.joint_names.index(name)


def smpl24() -> SkeletonSpec:
    """Default SMPL-24 skeleton with the group/chain tables used throughout."""
    names = SMPL24_JOINT_NAMES
    idx = {n: i for i, n in enumerate(names)}
    feet = (idx["left_ankle"], idx["right_ankle"], idx["left_foot"], idx["right_foot"])
    lower = (
        idx["left_hip"], idx["right_hip"],
        idx["left_knee"], idx["right_knee"],
        idx["left_ankle"], idx["right_ankle"],
        idx["left_foot"], idx["right_foot"],
    )
    upper = (
        idx["left_collar"], idx["right_collar"],
        idx["left_shoulder"], idx["right_shoulder"],
        idx["left_elbow"], idx["right_elbow"],
        idx["left_wrist"], idx["right_wrist"],
    )
    limbs = upper + (
        idx["left_knee"], idx["right_knee"],
        idx["left_ankle"], idx["right_ankle"],
        idx["left_foot"], idx["right_foot"],
    )
    paired = (
        (idx["left_ankle"], idx["right_ankle"]),
        (idx["left_knee"], idx["right_knee"]),
        (idx["left_hip"], idx["right_hip"]),
        (idx["left_shoulder"], idx["right_shoulder"]),
        (idx["left_elbow"], idx["right_elbow"]),
        (idx["left_wrist"], idx["right_wrist"]),
    )
    chains = {
        "left_leg": (idx["left_hip"], idx["left_knee"], idx["left_ankle"], idx["left_foot"]),
        "right_leg": (idx["right_hip"], idx["right_knee"], idx["right_ankle"], idx["right_foot"]),
        "left_arm": (
            idx["left_collar"], idx["left_shoulder"], idx["left_elbow"],
            idx["left_wrist"], idx["left_hand"],
        ),
        "right_arm": (
            idx["right_collar"], idx["right_shoulder"], idx["right_elbow"],
            idx["right_wrist"], idx["right_hand"],
        ),
    }
    return SkeletonSpec(
        joint_names=tuple(names),
        joint_parents=tuple(SMPL24_PARENTS),
        groups={"feet": feet, "lower": lower, "upper": upper, "limbs": limbs},
        paired=paired,
        chains=chains,
    )


PELVIS = 0
LEFT_HIP = 1
RIGHT_HIP = 2
LEFT_FOOT = 10
RIGHT_FOOT = 11
LEFT_WRIST = 20
RIGHT_WRIST = 21

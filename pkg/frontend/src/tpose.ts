// Built-in T-pose fixture: the standing template every synthetic clip in
// the toolkit starts from (meters, Y up, facing +Z, left side toward +X).
// Used for the offline render demo and snapshot tests.

export const JOINT_NAMES = [
  "pelvis", "left_hip", "right_hip", "spine1", "left_knee", "right_knee",
  "spine2", "left_ankle", "right_ankle", "spine3", "left_foot", "right_foot",
  "neck", "left_collar", "right_collar", "head", "left_shoulder",
  "right_shoulder", "left_elbow", "right_elbow", "left_wrist", "right_wrist",
  "left_hand", "right_hand",
];

export const JOINT_PARENTS = [
  -1, 0, 0, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 9, 9, 12, 13, 14, 16, 17, 18, 19,
  20, 21,
];

export const T_POSE: number[][] = [
  [0.0, 0.95, 0.0],
  [0.1, 0.9, 0.0],
  [-0.1, 0.9, 0.0],
  [0.0, 1.05, 0.0],
  [0.1, 0.5, 0.0],
  [-0.1, 0.5, 0.0],
  [0.0, 1.15, 0.0],
  [0.1, 0.1, 0.0],
  [-0.1, 0.1, 0.0],
  [0.0, 1.25, 0.0],
  [0.1, 0.0, 0.12],
  [-0.1, 0.0, 0.12],
  [0.0, 1.4, 0.0],
  [0.07, 1.35, 0.0],
  [-0.07, 1.35, 0.0],
  [0.0, 1.55, 0.0],
  [0.2, 1.35, 0.0],
  [-0.2, 1.35, 0.0],
  [0.45, 1.35, 0.0],
  [-0.45, 1.35, 0.0],
  [0.7, 1.35, 0.0],
  [-0.7, 1.35, 0.0],
  [0.8, 1.35, 0.0],
  [-0.8, 1.35, 0.0],
];

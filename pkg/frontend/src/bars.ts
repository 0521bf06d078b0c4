// Complexity bar chart model. Bar values are the service's numbers
// verbatim; only the pixel width is derived (shared scale across both
// profiles so before/after compare visually).

import { profileScores, type ProfilePayload } from "./types.js";

export interface Bar {
  criterion: number;
  label: string;
  value: number;
  // fraction of the widest bar, in [0, 1]
  width: number;
}

export interface BarChart {
  before: Bar[];
  after: Bar[];
}

const LABELS = ["footwork", "density", "rotation", "coordination", "asymmetry"];

export function barChart(before: ProfilePayload, after: ProfilePayload): BarChart {
  const b = profileScores(before);
  const a = profileScores(after);
  const peak = Math.max(...b, ...a, Number.MIN_VALUE);
  const toBars = (scores: number[]) =>
    scores.map((value, i) => ({
      criterion: i + 1,
      label: LABELS[i],
      value,
      width: value <= 0 ? 0 : value / peak,
    }));
  return { before: toBars(b), after: toBars(a) };
}

export function formatScore(value: number): string {
  return value.toPrecision(4);
}

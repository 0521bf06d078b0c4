// Timeline overlay: detected complex intervals as colored markers whose
// horizontal extent maps frame ranges onto a [0, 1] track.

import { criterionColor } from "./render.js";
import type { StageRecord } from "./types.js";

export interface Marker {
  criterion: number;
  start: number;
  end: number;
  // fractional positions along the timeline, inclusive frame spans
  left: number;
  right: number;
  color: string;
}

export function intervalOverlay(applied: StageRecord[], frames: number): Marker[] {
  if (frames < 1) throw new Error("timeline needs at least one frame");
  const markers: Marker[] = [];
  for (const stage of applied) {
    for (const iv of stage.intervals) {
      markers.push({
        criterion: stage.criterion,
        start: iv.s,
        end: iv.e,
        left: iv.s / frames,
        right: (iv.e + 1) / frames,
        color: criterionColor(stage.criterion),
      });
    }
  }
  return markers;
}

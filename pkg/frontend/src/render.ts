// Pure skeleton rendering: a frame of 24 joint positions plus the parent
// table becomes a list of 2D primitives, then an SVG string. No DOM or
// canvas access here, so every output is snapshot-testable.

export interface Camera {
  // orbit angle about the vertical axis, radians; 0 = front (+Z toward viewer)
  yaw: number;
  // pixels per meter
  zoom: number;
  width: number;
  height: number;
}

export const DEFAULT_CAMERA: Camera = { yaw: 0, zoom: 150, width: 480, height: 480 };

export interface Segment {
  parent: number;
  child: number;
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface JointDot {
  index: number;
  x: number;
  y: number;
}

export interface Scene {
  segments: Segment[];
  joints: JointDot[];
}

const round2 = (v: number) => Math.round(v * 100) / 100;

/** Orthographic projection centered on the pelvis (joint 0). */
export function projectFrame(frame: number[][], cam: Camera): [number, number][] {
  const [px, py, pz] = frame[0];
  const c = Math.cos(cam.yaw);
  const s = Math.sin(cam.yaw);
  return frame.map(([x, y, z]) => {
    const dx = x - px;
    const dz = z - pz;
    // orbit about Y, then drop depth: screen x from the rotated X axis
    const xr = dx * c + dz * s;
    return [
      round2(cam.width / 2 + cam.zoom * xr),
      round2(cam.height / 2 - cam.zoom * (y - py)),
    ];
  });
}

export function renderSkeleton(frame: number[][], parents: number[], cam: Camera): Scene {
  if (frame.length !== parents.length) {
    throw new Error(`frame has ${frame.length} joints but parents has ${parents.length}`);
  }
  for (const row of frame) {
    if (!row.every(Number.isFinite)) throw new Error("non-finite joint position");
  }
  const pts = projectFrame(frame, cam);
  const segments: Segment[] = [];
  parents.forEach((p, child) => {
    if (p < 0) return;
    segments.push({
      parent: p,
      child,
      x1: pts[p][0],
      y1: pts[p][1],
      x2: pts[child][0],
      y2: pts[child][1],
    });
  });
  const joints = pts.map(([x, y], index) => ({ index, x, y }));
  return { segments, joints };
}

const CRITERION_COLORS = ["#e45756", "#f58518", "#54a24b", "#4c78a8", "#b279a2"];

export function criterionColor(criterion: number): string {
  return CRITERION_COLORS[(criterion - 1) % CRITERION_COLORS.length];
}

export function sceneToSvg(scene: Scene, cam: Camera, stroke = "#222"): string {
  const lines = scene.segments.map(
    (s) =>
      `<line x1="${s.x1}" y1="${s.y1}" x2="${s.x2}" y2="${s.y2}" ` +
      `stroke="${stroke}" stroke-width="3" stroke-linecap="round"/>`,
  );
  const dots = scene.joints.map(
    (j) => `<circle cx="${j.x}" cy="${j.y}" r="3.5" fill="${stroke}"/>`,
  );
  return (
    `<svg xmlns="http://www.w3.org/2000/svg" width="${cam.width}" ` +
    `height="${cam.height}" viewBox="0 0 ${cam.width} ${cam.height}">` +
    lines.join("") +
    dots.join("") +
    `</svg>`
  );
}

// Payload shapes mirroring the service JSON exactly. The UI never
// recomputes any score; it only displays numbers from these objects.

export interface SkeletonInfo {
  joint_names: string[];
  joint_parents: number[];
}

export interface ProfilePayload {
  c1: number;
  c2: number;
  c3: number;
  c4: number;
  c5: number;
  activations: Record<string, number[]>;
}

export interface AnalysisPayload extends ProfilePayload {
  fps: number;
  frames: number;
  skeleton: SkeletonInfo;
}

export interface IntervalRec {
  s: number;
  e: number;
  joints: number[];
}

export interface StageRecord {
  criterion: number;
  attempted: boolean;
  accepted: boolean;
  score_before: number;
  score_after: number;
  intervals: IntervalRec[];
}

export interface MotionPayload {
  fps: number;
  joints: string[];
  frames: number[][][];
  contacts?: number[][];
}

export interface SimplifyPayload {
  before: ProfilePayload;
  after: ProfilePayload;
  applied: StageRecord[];
  motion: MotionPayload;
}

export interface SimplifyConfig {
  epsilon?: number;
  alpha?: number;
  k?: number;
  lambda_slow?: number;
  tau?: (number | null)[];
  min_len?: (number | null)[];
  criteria_enabled?: boolean[];
}

export const CRITERIA = [1, 2, 3, 4, 5] as const;

export function profileScores(p: ProfilePayload): number[] {
  return [p.c1, p.c2, p.c3, p.c4, p.c5];
}

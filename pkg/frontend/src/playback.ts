// Playback clock for one skeleton track. Both tracks (original and
// simplified) get their own instance but share F from the service payload.

export class PlaybackTrack {
  readonly frames: number;
  readonly fps: number;
  time = 0;
  playing = false;
  speed = 1;

  constructor(frames: number, fps: number) {
    if (!Number.isInteger(frames) || frames < 1) {
      throw new Error(`frame count must be a positive integer, got ${frames}`);
    }
    if (!(fps > 0)) throw new Error(`fps must be positive, got ${fps}`);
    this.frames = frames;
    this.fps = fps;
  }

  get duration(): number {
    return this.frames / this.fps;
  }

  /** Advance the clock by dt seconds of wall time; loops at the end. */
  tick(dt: number): void {
    if (!this.playing) return;
    this.time = (this.time + dt * this.speed) % this.duration;
  }

  seek(time: number): void {
    this.time = Math.min(Math.max(time, 0), this.duration);
  }

  /** Frame index for the current time, always in [0, frames). */
  frameIndex(): number {
    return Math.min(Math.floor(this.time * this.fps), this.frames - 1);
  }
}

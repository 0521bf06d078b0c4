// Debounced what-if loop around POST /simplify. Slider changes funnel
// through update(); at most one request leaves per debounce window, and a
// monotonically increasing token discards responses that arrive after a
// newer request was issued, so the view only ever shows the latest state.

import type { SimplifyConfig, SimplifyPayload } from "./types.js";

export type SendFn = (config: SimplifyConfig) => Promise<SimplifyPayload>;

export interface WhatIfOptions {
  debounceMs?: number;
  onResult: (payload: SimplifyPayload) => void;
  onError?: (err: unknown) => void;
}

export const DEBOUNCE_MS = 250;

export class WhatIfRequester {
  private send: SendFn;
  private debounceMs: number;
  private onResult: (payload: SimplifyPayload) => void;
  private onError: (err: unknown) => void;
  private timer: ReturnType<typeof setTimeout> | null = null;
  private pending: SimplifyConfig | null = null;
  private latestToken = 0;
  sent = 0;

  constructor(send: SendFn, opts: WhatIfOptions) {
    this.send = send;
    this.debounceMs = opts.debounceMs ?? DEBOUNCE_MS;
    this.onResult = opts.onResult;
    this.onError = opts.onError ?? (() => {});
  }

  /** Record the newest slider state; (re)start the debounce window. */
  update(config: SimplifyConfig): void {
    this.pending = config;
    if (this.timer !== null) clearTimeout(this.timer);
    this.timer = setTimeout(() => this.fire(), this.debounceMs);
  }

  /** Skip the wait and send the pending state now (e.g. on pointer-up). */
  flush(): void {
    if (this.timer !== null) {
      clearTimeout(this.timer);
      this.timer = null;
    }
    if (this.pending !== null) this.fire();
  }

  private fire(): void {
    const config = this.pending!;
    this.pending = null;
    this.timer = null;
    const token = ++this.latestToken;
    this.sent += 1;
    this.send(config).then(
      (payload) => {
        if (token === this.latestToken) this.onResult(payload);
      },
      (err) => {
        // failed request: report, keep whatever the view last accepted
        if (token === this.latestToken) this.onError(err);
      },
    );
  }
}

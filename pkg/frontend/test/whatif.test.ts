import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { WhatIfRequester } from "../src/whatif.js";
import type { SimplifyPayload } from "../src/types.js";

const profile = (v: number) => ({
  c1: v, c2: v, c3: v, c4: v, c5: v, activations: {},
});

const payload = (v: number): SimplifyPayload => ({
  before: profile(v),
  after: profile(v / 2),
  applied: [],
  motion: { fps: 60, joints: [], frames: [] },
});

describe("WhatIfRequester", () => {
  beforeEach(() => vi.useFakeTimers());
  afterEach(() => vi.useRealTimers());

  it("collapses slider spam to one request per debounce window", async () => {
    const send = vi.fn().mockResolvedValue(payload(1));
    const requester = new WhatIfRequester(send, { onResult: () => {} });

    for (let i = 0; i < 20; i++) {
      requester.update({ k: i / 20 });
      vi.advanceTimersByTime(10);
    }
    expect(send).not.toHaveBeenCalled();

    vi.advanceTimersByTime(250);
    expect(send).toHaveBeenCalledTimes(1);
    // only the newest slider state goes out
    expect(send).toHaveBeenCalledWith({ k: 19 / 20 });

    requester.update({ k: 1 });
    vi.advanceTimersByTime(250);
    expect(send).toHaveBeenCalledTimes(2);
  });

  it("discards responses that arrive after a newer request", async () => {
    const resolvers: ((p: SimplifyPayload) => void)[] = [];
    const send = vi.fn(
      () => new Promise<SimplifyPayload>((resolve) => resolvers.push(resolve)),
    );
    const seen: number[] = [];
    const requester = new WhatIfRequester(send, {
      onResult: (p) => seen.push(p.before.c1),
    });

    requester.update({ k: 0.1 });
    vi.advanceTimersByTime(250);
    requester.update({ k: 0.9 });
    vi.advanceTimersByTime(250);
    expect(send).toHaveBeenCalledTimes(2);

    // second response lands first; the late first response must be dropped
    resolvers[1](payload(2));
    await vi.runAllTimersAsync();
    resolvers[0](payload(1));
    await vi.runAllTimersAsync();
    expect(seen).toEqual([2]);
  });

  it("keeps the last good state on failure and surfaces the error", async () => {
    let fail = false;
    const send = vi.fn(() =>
      fail ? Promise.reject(new Error("boom")) : Promise.resolve(payload(3)),
    );
    const results: SimplifyPayload[] = [];
    const errors: unknown[] = [];
    const requester = new WhatIfRequester(send, {
      onResult: (p) => results.push(p),
      onError: (e) => errors.push(e),
    });

    requester.update({ k: 0.5 });
    vi.advanceTimersByTime(250);
    await vi.runAllTimersAsync();
    expect(results).toHaveLength(1);

    fail = true;
    requester.update({ k: 0.6 });
    vi.advanceTimersByTime(250);
    await vi.runAllTimersAsync();
    // no new result: the view keeps showing results[0]
    expect(results).toHaveLength(1);
    expect(errors).toHaveLength(1);
  });

  it("flush sends the pending state immediately", () => {
    const send = vi.fn().mockResolvedValue(payload(1));
    const requester = new WhatIfRequester(send, { onResult: () => {} });
    requester.update({ k: 0.3 });
    requester.flush();
    expect(send).toHaveBeenCalledTimes(1);
    // nothing pending afterward: the timer was consumed
    vi.advanceTimersByTime(1000);
    expect(send).toHaveBeenCalledTimes(1);
  });
});

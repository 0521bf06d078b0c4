import { describe, expect, it, vi } from "vitest";

import { ApiError, StudioClient } from "../src/api.js";

const jsonResponse = (body: unknown, status = 200) =>
  new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });

describe("StudioClient", () => {
  it("uploads the motion text as-is and returns the id", async () => {
    const fetchFn = vi.fn().mockResolvedValue(jsonResponse({ id: "abc123" }, 201));
    const client = new StudioClient("", fetchFn as unknown as typeof fetch);
    const id = await client.upload('{"fps": 60}');
    expect(id).toBe("abc123");
    const [url, init] = fetchFn.mock.calls[0];
    expect(url).toBe("/sequences");
    expect(init.body).toBe('{"fps": 60}');
  });

  it("passes config through simplify unchanged", async () => {
    const fetchFn = vi.fn().mockResolvedValue(
      jsonResponse({ before: {}, after: {}, applied: [], motion: {} }),
    );
    const client = new StudioClient("", fetchFn as unknown as typeof fetch);
    await client.simplify("abc", { k: 0.25, criteria_enabled: [true, false, true, true, true] });
    const [url, init] = fetchFn.mock.calls[0];
    expect(url).toBe("/sequences/abc/simplify");
    expect(JSON.parse(init.body)).toEqual({
      k: 0.25,
      criteria_enabled: [true, false, true, true, true],
    });
  });

  it("raises ApiError with the service's error message", async () => {
    // fresh Response per call: a body is only readable once
    const fetchFn = vi.fn(async () => jsonResponse({ error: "unknown sequence id" }, 404));
    const client = new StudioClient("", fetchFn as unknown as typeof fetch);
    await expect(client.profile("nope")).rejects.toThrowError(ApiError);
    await expect(
      new StudioClient("", fetchFn as unknown as typeof fetch).profile("nope"),
    ).rejects.toThrow("unknown sequence id");
  });

  it("prefixes an explicit base URL", async () => {
    const fetchFn = vi.fn().mockResolvedValue(jsonResponse({ status: "ok", version: "1" }));
    const client = new StudioClient("http://localhost:7340", fetchFn as unknown as typeof fetch);
    await client.health();
    expect(fetchFn.mock.calls[0][0]).toBe("http://localhost:7340/healthz");
  });
});

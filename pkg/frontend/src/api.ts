// Thin client for the what-if service JSON API. All math happens server
// side; this module only moves payloads.

import type { AnalysisPayload, SimplifyConfig, SimplifyPayload } from "./types.js";

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.status = status;
  }
}

async function asJson<T>(res: Response): Promise<T> {
  if (!res.ok) {
    let detail = res.statusText;
    try {
      const body = await res.json();
      if (body && typeof body.error === "string") detail = body.error;
    } catch {
      // non-JSON error body: keep the status text
    }
    throw new ApiError(res.status, detail);
  }
  return res.json() as Promise<T>;
}

export class StudioClient {
  constructor(
    private base = "",
    private fetchFn: typeof fetch = fetch,
  ) {}

  async health(): Promise<{ status: string; version: string }> {
    return asJson(await this.fetchFn(`${this.base}/healthz`));
  }

  /** Upload motion-JSON text; returns the new session id. */
  async upload(motionJson: string): Promise<string> {
    const res = await this.fetchFn(`${this.base}/sequences`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: motionJson,
    });
    const { id } = await asJson<{ id: string }>(res);
    return id;
  }

  async profile(id: string): Promise<AnalysisPayload> {
    return asJson(await this.fetchFn(`${this.base}/sequences/${id}/profile`));
  }

  async simplify(id: string, config: SimplifyConfig): Promise<SimplifyPayload> {
    const res = await this.fetchFn(`${this.base}/sequences/${id}/simplify`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(config),
    });
    return asJson(res);
  }
}

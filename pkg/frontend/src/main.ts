// Browser entry point: wires the DOM controls to the pure modules. All
// state lives in one ViewState object; every service response replaces the
// simplified track, bars, and timeline atomically.

import { StudioClient } from "./api.js";
import { barChart, formatScore } from "./bars.js";
import { PlaybackTrack } from "./playback.js";
import { DEFAULT_CAMERA, renderSkeleton, sceneToSvg, type Camera } from "./render.js";
import { intervalOverlay } from "./timeline.js";
import { JOINT_PARENTS, T_POSE } from "./tpose.js";
import type { SimplifyConfig, SimplifyPayload } from "./types.js";
import { WhatIfRequester } from "./whatif.js";

interface ViewState {
  sessionId: string | null;
  fps: number;
  frames: number;
  parents: number[];
  original: number[][][];
  simplified: number[][][];
  last: SimplifyPayload | null;
  camera: Camera;
}

const state: ViewState = {
  sessionId: null,
  fps: 60,
  frames: 1,
  parents: JOINT_PARENTS,
  original: [T_POSE],
  simplified: [T_POSE],
  last: null,
  camera: { ...DEFAULT_CAMERA, width: 360, height: 420 },
};

const $ = (id: string) => document.getElementById(id)!;

function currentConfig(): SimplifyConfig {
  const num = (id: string) => parseFloat(($(id) as HTMLInputElement).value);
  return {
    epsilon: num("epsilon"),
    alpha: num("alpha"),
    k: num("k"),
    lambda_slow: Math.round(num("lambda")),
    criteria_enabled: [1, 2, 3, 4, 5].map(
      (c) => ($(`crit-${c}`) as HTMLInputElement).checked,
    ),
  };
}

function showBanner(message: string): void {
  const banner = $("banner");
  banner.textContent = `${message} (showing last good state)`;
  banner.classList.remove("hidden");
}

function renderBars(payload: SimplifyPayload): void {
  const chart = barChart(payload.before, payload.after);
  for (const [rowId, bars] of [["bars-before", chart.before], ["bars-after", chart.after]] as const) {
    const row = $(rowId);
    row.innerHTML = "";
    for (const bar of bars) {
      const cell = document.createElement("div");
      cell.className = "bar";
      cell.innerHTML =
        `<span class="bar-label">C${bar.criterion} ${bar.label}</span>` +
        `<span class="bar-fill" style="width:${(bar.width * 100).toFixed(1)}%"></span>` +
        `<span class="bar-value">${formatScore(bar.value)}</span>`;
      row.appendChild(cell);
    }
  }
}

function renderTimeline(payload: SimplifyPayload): void {
  const track = $("timeline");
  track.innerHTML = "";
  for (const m of intervalOverlay(payload.applied, state.frames)) {
    const el = document.createElement("div");
    el.className = "marker";
    el.title = `C${m.criterion} frames ${m.start}-${m.end}`;
    el.style.left = `${(m.left * 100).toFixed(2)}%`;
    el.style.width = `${((m.right - m.left) * 100).toFixed(2)}%`;
    el.style.background = m.color;
    track.appendChild(el);
  }
}

function acceptResult(payload: SimplifyPayload): void {
  state.last = payload;
  state.simplified = payload.motion.frames;
  $("banner").classList.add("hidden");
  renderBars(payload);
  renderTimeline(payload);
  $("frames-after").textContent = `${payload.motion.frames.length} frames`;
}

const client = new StudioClient();
const requester = new WhatIfRequester(
  (config) => client.simplify(state.sessionId!, config),
  {
    onResult: acceptResult,
    onError: (err) => showBanner(err instanceof Error ? err.message : String(err)),
  },
);

let clock = new PlaybackTrack(1, 60);

function drawTracks(): void {
  const f = clock.frameIndex();
  const left = renderSkeleton(state.original[Math.min(f, state.original.length - 1)],
    state.parents, state.camera);
  const right = renderSkeleton(state.simplified[Math.min(f, state.simplified.length - 1)],
    state.parents, state.camera);
  $("track-original").innerHTML = sceneToSvg(left, state.camera);
  $("track-simplified").innerHTML = sceneToSvg(right, state.camera, "#4c78a8");
  ($("scrub") as HTMLInputElement).value = String(f);
}

function loop(prev: number) {
  requestAnimationFrame((now) => {
    clock.tick((now - prev) / 1000);
    drawTracks();
    loop(now);
  });
}

async function onUpload(file: File): Promise<void> {
  const text = await file.text();
  state.sessionId = await client.upload(text);
  const analysis = await client.profile(state.sessionId);
  state.fps = analysis.fps;
  state.frames = analysis.frames;
  state.parents = analysis.skeleton.joint_parents;
  const motion = JSON.parse(text);
  state.original = motion.frames;
  state.simplified = motion.frames;
  clock = new PlaybackTrack(state.frames, state.fps);
  clock.playing = true;
  $("frames-before").textContent = `${state.frames} frames`;
  $("frames-after").textContent = `${state.frames} frames`;
  const scrub = $("scrub") as HTMLInputElement;
  scrub.max = String(state.frames - 1);
  requester.update(currentConfig());
  requester.flush();
}

function wire(): void {
  $("clip").addEventListener("change", (ev) => {
    const input = ev.target as HTMLInputElement;
    if (input.files?.[0]) {
      onUpload(input.files[0]).catch((err) => showBanner(String(err)));
    }
  });
  for (const id of ["epsilon", "alpha", "k", "lambda"]) {
    $(id).addEventListener("input", () => {
      $(`${id}-value`).textContent = ($(id) as HTMLInputElement).value;
      if (state.sessionId) requester.update(currentConfig());
    });
  }
  for (let c = 1; c <= 5; c++) {
    $(`crit-${c}`).addEventListener("change", () => {
      if (state.sessionId) requester.update(currentConfig());
    });
  }
  $("play").addEventListener("click", () => {
    clock.playing = !clock.playing;
    $("play").textContent = clock.playing ? "pause" : "play";
  });
  $("scrub").addEventListener("input", (ev) => {
    clock.seek(parseInt((ev.target as HTMLInputElement).value, 10) / state.fps);
  });
  $("orbit").addEventListener("input", (ev) => {
    state.camera.yaw = (parseFloat((ev.target as HTMLInputElement).value) * Math.PI) / 180;
  });
  drawTracks();
  loop(performance.now());
}

if (typeof document !== "undefined" && document.readyState !== "loading") {
  wire();
} else if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", wire);
}

/** DOM wiring: domain editor canvas, 3D view, expression inputs,
 * invariant panel, import/export.  All geometry and numbers come from
 * the design service; this file only routes events and pixels.
 */

import type { DesignResponse, DesignResult } from "./api.js";
import { httpTransport } from "./api.js";
import { buildReadout } from "./panel.js";
import {
  defaultCamera, deltaSparkline, dolly, orbit, paintScene,
} from "./render.js";
import { DesignScheduler } from "./scheduler.js";
import {
  DOMAIN_U, DOMAIN_V, NetFormatError, buildRequest, defaultState,
  dragControlPoint, exportNet, importNet, releaseControlPoint, seamIsC1,
} from "./state.js";

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

const editor = $<HTMLCanvasElement>("editor");
const view = $<HTMLCanvasElement>("view");
const spark = $<HTMLCanvasElement>("sparkline");
const banner = $<HTMLDivElement>("banner");
const badges = $<HTMLDivElement>("badges");
const liftUInput = $<HTMLInputElement>("lift-u");
const liftVInput = $<HTMLInputElement>("lift-v");
const snapToggle = $<HTMLInputElement>("c1-snap");
const serviceInput = $<HTMLInputElement>("service-url");

const MESH_NT = 64;

let state = defaultState();
let camera = defaultCamera();
let lastResult: { raw: string; body: DesignResponse } | null = null;

liftUInput.value = state.liftU;
liftVInput.value = state.liftV;
snapToggle.checked = state.c1Snap;

const scheduler = new DesignScheduler(
  (request) => httpTransport(serviceInput.value.replace(/\/$/, ""))(request),
  (result) => applyResult(result),
  100,
  undefined,
  (err) => showBanner(`service unreachable: ${err}`, null),
);

const scheduleDesign = (): void => {
  scheduler.request(buildRequest(state, { meshNt: MESH_NT }));
};

const showBanner = (text: string, fixit: (() => void) | null): void => {
  banner.textContent = text;
  banner.style.display = "block";
  banner.onclick = null;
  if (fixit) {
    const button = document.createElement("button");
    button.textContent = "close curve";
    button.onclick = fixit;
    banner.append(" ", button);
  }
};

const clearBanner = (): void => {
  banner.style.display = "none";
  banner.textContent = "";
};

function applyResult(result: DesignResult): void {
  if (result.status !== 200) {
    const err = result.body as { error: string; position?: number };
    const where = err.position !== undefined ? ` (position ${err.position})` : "";
    const canClose = /not closed/.test(err.error);
    showBanner(`${err.error}${where}`, canClose ? closeCurve : null);
    return;
  }
  clearBanner();
  lastResult = { raw: result.raw, body: result.body as DesignResponse };
  drawAll();
}

const closeCurve = (): void => {
  const points = state.points.map((p) => [...p] as [number, number]);
  points[points.length - 1] = [...points[0]] as [number, number];
  state = { ...state, points };
  drawEditor();
  scheduleDesign();
};

// ---------------------------------------------------------------- editor

const toCanvas = (p: [number, number]): [number, number] => [
  ((p[0] - DOMAIN_U[0]) / (DOMAIN_U[1] - DOMAIN_U[0])) * editor.width,
  editor.height - ((p[1] - DOMAIN_V[0]) / (DOMAIN_V[1] - DOMAIN_V[0])) * editor.height,
];

const fromCanvas = (x: number, y: number): [number, number] => [
  DOMAIN_U[0] + (x / editor.width) * (DOMAIN_U[1] - DOMAIN_U[0]),
  DOMAIN_V[0] + ((editor.height - y) / editor.height) * (DOMAIN_V[1] - DOMAIN_V[0]),
];

function drawEditor(): void {
  const ctx = editor.getContext("2d")!;
  ctx.clearRect(0, 0, editor.width, editor.height);
  ctx.strokeStyle = "#39405a";
  ctx.strokeRect(0.5, 0.5, editor.width - 1, editor.height - 1);

  // polygon
  ctx.strokeStyle = "#5a6596";
  ctx.setLineDash([4, 3]);
  ctx.beginPath();
  state.points.forEach((p, i) => {
    const [x, y] = toCanvas(p);
    if (i === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  });
  ctx.stroke();
  ctx.setLineDash([]);

  // sampled curve via de Casteljau (display only; geometry is server-side)
  ctx.strokeStyle = "#9ecbff";
  ctx.beginPath();
  for (let k = 0; k <= 128; k += 1) {
    const t = k / 128;
    let us = state.points.map((p) => p[0]);
    let vs = state.points.map((p) => p[1]);
    while (us.length > 1) {
      us = us.slice(0, -1).map((a, i) => (1 - t) * a + t * us[i + 1]);
      vs = vs.slice(0, -1).map((a, i) => (1 - t) * a + t * vs[i + 1]);
    }
    const [x, y] = toCanvas([us[0], vs[0]]);
    if (k === 0) ctx.moveTo(x, y);
    else ctx.lineTo(x, y);
  }
  ctx.stroke();

  // handles: closure handle ringed, seam triple highlighted when C1
  const c1 = seamIsC1(state.points);
  state.points.forEach((p, i) => {
    if (i === state.points.length - 1) return; // same handle as p0
    const [x, y] = toCanvas(p);
    ctx.beginPath();
    ctx.arc(x, y, i === 0 ? 7 : 5, 0, 2 * Math.PI);
    ctx.fillStyle = i === state.selection ? "#ffd166" : i === 0 ? "#ff7b72" : "#7ee787";
    ctx.fill();
    if (i === 0) {
      ctx.strokeStyle = c1 ? "#7ee787" : "#ff7b72";
      ctx.stroke();
    }
  });
}

let dragging: number | null = null;

editor.addEventListener("pointerdown", (ev) => {
  const rect = editor.getBoundingClientRect();
  const x = ev.clientX - rect.left;
  const y = ev.clientY - rect.top;
  let best = -1;
  let bestDist = 12;
  state.points.slice(0, -1).forEach((p, i) => {
    const [px, py] = toCanvas(p);
    const d = Math.hypot(px - x, py - y);
    if (d < bestDist) {
      best = i;
      bestDist = d;
    }
  });
  if (best >= 0) {
    dragging = best;
    editor.setPointerCapture(ev.pointerId);
  }
});

editor.addEventListener("pointermove", (ev) => {
  if (dragging === null) return;
  const rect = editor.getBoundingClientRect();
  const target = fromCanvas(ev.clientX - rect.left, ev.clientY - rect.top);
  const outcome = dragControlPoint(state, dragging, target);
  state = outcome.state;
  if (outcome.clamped) showBanner("control point clamped to the domain rectangle", null);
  else clearBanner();
  drawEditor();
  scheduleDesign();
});

editor.addEventListener("pointerup", () => {
  if (dragging === null) return;
  state = releaseControlPoint(state, dragging);
  dragging = null;
  drawEditor();
  scheduleDesign();
});

// ---------------------------------------------------------------- 3D view

function drawAll(): void {
  drawEditor();
  if (!lastResult) return;
  const ctx = view.getContext("2d")!;
  ctx.clearRect(0, 0, view.width, view.height);
  paintScene(ctx, lastResult.body, camera, {
    width: view.width,
    height: view.height,
    meshNt: MESH_NT,
  });

  const readout = buildReadout(lastResult.raw, lastResult.body);
  $<HTMLSpanElement>("pitch").textContent = readout.pitch;
  $<HTMLSpanElement>("angle").textContent = readout.angleOfPitch;
  $<HTMLSpanElement>("slen").textContent = readout.strictionLength;
  $<HTMLSpanElement>("esterr").textContent = readout.estError;
  badges.replaceChildren(
    ...readout.badges.map((text) => {
      const span = document.createElement("span");
      span.className = "badge";
      span.textContent = text;
      return span;
    }),
  );

  const sctx = spark.getContext("2d")!;
  sctx.clearRect(0, 0, spark.width, spark.height);
  sctx.strokeStyle = "#9ecbff";
  sctx.beginPath();
  deltaSparkline(lastResult.body.profile, spark.width, spark.height).forEach(
    ([x, y], i) => (i === 0 ? sctx.moveTo(x, y) : sctx.lineTo(x, y)),
  );
  sctx.stroke();
}

let viewDrag: [number, number] | null = null;
view.addEventListener("pointerdown", (ev) => {
  viewDrag = [ev.clientX, ev.clientY];
  view.setPointerCapture(ev.pointerId);
});
view.addEventListener("pointermove", (ev) => {
  if (!viewDrag) return;
  camera = orbit(camera, (ev.clientX - viewDrag[0]) * 0.01, (ev.clientY - viewDrag[1]) * 0.01);
  viewDrag = [ev.clientX, ev.clientY];
  drawAll();
});
view.addEventListener("pointerup", () => (viewDrag = null));
view.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  camera = dolly(camera, ev.deltaY > 0 ? 1.1 : 0.9);
  drawAll();
});

// ---------------------------------------------------------------- controls

for (const [input, key] of [[liftUInput, "liftU"], [liftVInput, "liftV"]] as const) {
  input.addEventListener("change", () => {
    state = { ...state, [key]: input.value };
    scheduleDesign();
  });
}

snapToggle.addEventListener("change", () => {
  state = { ...state, c1Snap: snapToggle.checked };
});

$<HTMLButtonElement>("export").addEventListener("click", () => {
  const blob = new Blob([exportNet(state)], { type: "application/json" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = "net.json";
  a.click();
  URL.revokeObjectURL(a.href);
});

$<HTMLInputElement>("import").addEventListener("change", async (ev) => {
  const file = (ev.target as HTMLInputElement).files?.[0];
  if (!file) return;
  try {
    state = importNet(await file.text(), state);
    clearBanner();
    drawEditor();
    scheduleDesign();
  } catch (err) {
    if (err instanceof NetFormatError) {
      showBanner(`import failed: ${err.message} (position ${err.position})`, null);
    } else {
      showBanner(`import failed: ${err}`, null);
    }
  }
});

drawEditor();
scheduleDesign();

/** Hand-rolled 3D painter: orbit camera, depth-sorted flat-shaded faces,
 * overlay polylines.  No WebGL, no dependencies; plain canvas 2D.
 */

import type { DesignResponse, ProfileRecord, Triple } from "./api.js";

export interface OrbitCamera {
  theta: number; // azimuth, radians
  phi: number; // elevation, radians
  distance: number;
  target: Triple;
}

export const defaultCamera = (): OrbitCamera => ({
  theta: 0.7,
  phi: 0.5,
  distance: 5,
  target: [0, 0, 0],
});

export const orbit = (cam: OrbitCamera, dTheta: number, dPhi: number): OrbitCamera => ({
  ...cam,
  theta: cam.theta + dTheta,
  phi: Math.min(1.5, Math.max(-1.5, cam.phi + dPhi)),
});

export const dolly = (cam: OrbitCamera, factor: number): OrbitCamera => ({
  ...cam,
  distance: Math.min(50, Math.max(0.5, cam.distance * factor)),
});

export interface Projected {
  x: number;
  y: number;
  depth: number;
}

/** Perspective projection into a width x height viewport. */
export const project = (
  cam: OrbitCamera,
  p: Triple,
  width: number,
  height: number,
): Projected => {
  const ct = Math.cos(cam.theta);
  const st = Math.sin(cam.theta);
  const cp = Math.cos(cam.phi);
  const sp = Math.sin(cam.phi);
  const dx = p[0] - cam.target[0];
  const dy = p[1] - cam.target[1];
  const dz = p[2] - cam.target[2];
  // camera basis: right, up, forward (looking at the target)
  const rx = -st, ry = ct, rz = 0;
  const fx = -ct * cp, fy = -st * cp, fz = -sp;
  const ux = fy * rz - fz * ry, uy = fz * rx - fx * rz, uz = fx * ry - fy * rx;
  const cx = dx * rx + dy * ry + dz * rz;
  const cy = dx * ux + dy * uy + dz * uz;
  const cz = dx * fx + dy * fy + dz * fz + cam.distance;
  const scale = (0.9 * Math.min(width, height)) / Math.max(cz, 0.1);
  return {
    x: width / 2 + cx * scale,
    y: height / 2 - cy * scale,
    depth: cz,
  };
};

/** Shade by curvature magnitude: flat (developable) surfaces stay cool
 * grey-blue, strongly curved rulings run to warm tones.  The magnitude
 * comes from the service profile (|K_G| on the striction line is
 * (kappa/kappa_bar)^2 = 1/delta^2; we use |delta| directly, small
 * delta = flatter).  Returns a CSS color.
 */
export const curvatureColor = (record: ProfileRecord | undefined, lambert: number): string => {
  let warmth = 0;
  if (record && !record.flags.includes("developable") && record.delta !== 0) {
    // |K_G(t, 0)| = 1/delta^2; map through atan for a bounded ramp
    warmth = Math.atan(1 / (record.delta * record.delta) / 4) / (Math.PI / 2);
  }
  const l = 0.35 + 0.6 * Math.max(0, Math.min(1, lambert));
  const r = Math.round(80 + 150 * warmth * l);
  const g = Math.round(90 + 60 * l - 40 * warmth);
  const b = Math.round(205 * l * (1 - 0.7 * warmth) + 30);
  return `rgb(${r}, ${g}, ${b})`;
};

/** Minimal slice of CanvasRenderingContext2D used by the painters, so
 * tests can drive them with a recording stub. */
export interface Painter2D {
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  fill(): void;
  stroke(): void;
  setLineDash(segments: number[]): void;
}

export interface SceneOptions {
  width: number;
  height: number;
  meshNt: number;
}

/** Paint the surface mesh, rulings and striction curve.  Returns the
 * number of faces drawn (for tests). */
export const paintScene = (
  ctx: Painter2D,
  response: DesignResponse,
  cam: OrbitCamera,
  opts: SceneOptions,
): number => {
  const { vertices, normals, faces, striction } = response.mesh;
  const pts = vertices.map((v) => project(cam, v, opts.width, opts.height));

  // light along the view direction, flat shading per face
  const lx = Math.cos(cam.theta) * Math.cos(cam.phi);
  const ly = Math.sin(cam.theta) * Math.cos(cam.phi);
  const lz = Math.sin(cam.phi);

  const profile = response.profile;
  const rows = opts.meshNt + 1;
  const perRow = rows > 0 ? vertices.length / rows : vertices.length;

  const order = faces
    .map((f, i) => ({
      i,
      depth: (pts[f[0]].depth + pts[f[1]].depth + pts[f[2]].depth) / 3,
    }))
    .sort((a, b) => b.depth - a.depth);

  let drawn = 0;
  for (const { i } of order) {
    const [a, b, c] = faces[i];
    const n = normals[a];
    const lambert = Math.abs(n[0] * lx + n[1] * ly + n[2] * lz);
    const row = Math.floor(a / Math.max(1, perRow));
    const rec = profile.length
      ? profile[Math.min(profile.length - 1,
          Math.round((row / Math.max(1, opts.meshNt)) * (profile.length - 1)))]
      : undefined;
    ctx.fillStyle = curvatureColor(rec, lambert);
    ctx.beginPath();
    ctx.moveTo(pts[a].x, pts[a].y);
    ctx.lineTo(pts[b].x, pts[b].y);
    ctx.lineTo(pts[c].x, pts[c].y);
    ctx.closePath();
    ctx.fill();
    drawn += 1;
  }

  // ruling overlay: one polyline per t-row (first and last w column)
  ctx.strokeStyle = "rgba(255, 255, 255, 0.25)";
  ctx.lineWidth = 1;
  ctx.setLineDash([]);
  for (let row = 0; row < rows && perRow >= 2; row += 4) {
    const start = row * perRow;
    const end = start + perRow - 1;
    if (end >= pts.length) break;
    ctx.beginPath();
    ctx.moveTo(pts[start].x, pts[start].y);
    ctx.lineTo(pts[end].x, pts[end].y);
    ctx.stroke();
  }

  // striction curve: dashed wherever the profile flags developable samples
  if (striction.length >= 2) {
    const anyDevelopable = profile.some((r) => r.flags.includes("developable"));
    ctx.strokeStyle = "#ffd166";
    ctx.lineWidth = 2;
    ctx.setLineDash(anyDevelopable ? [6, 4] : []);
    ctx.beginPath();
    const first = project(cam, striction[0], opts.width, opts.height);
    ctx.moveTo(first.x, first.y);
    for (let k = 1; k < striction.length; k += 1) {
      const q = project(cam, striction[k], opts.width, opts.height);
      ctx.lineTo(q.x, q.y);
    }
    ctx.stroke();
    ctx.setLineDash([]);
  }
  return drawn;
};

/** Sparkline path for delta(t), normalized into a w x h box; returns the
 * polyline points (tests check the geometry, main.ts strokes it). */
export const deltaSparkline = (
  profile: ProfileRecord[],
  w: number,
  h: number,
): [number, number][] => {
  if (profile.length === 0) return [];
  const deltas = profile.map((r) => r.delta);
  const lo = Math.min(...deltas);
  const hi = Math.max(...deltas);
  const span = hi - lo || 1;
  return profile.map((r, i) => [
    (i / Math.max(1, profile.length - 1)) * w,
    h - ((r.delta - lo) / span) * h,
  ]);
};

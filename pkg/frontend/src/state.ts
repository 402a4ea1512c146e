/** Editor state: the control net, lift expressions, and editing rules.
 *
 * The net is always closed in the editor: the first and last control
 * points are one handle, so dragging either moves both.  The optional
 * C1 snap keeps the seam tangent-continuous by projecting the
 * last-but-one point onto the line through the first two on release.
 */

import type { DesignRequest, Pair } from "./api.js";

export const DOMAIN_U: Pair = [0, Math.PI];
export const DOMAIN_V: Pair = [0, 2 * Math.PI];

export interface EditorState {
  points: Pair[]; // closed: points[0] and points[n-1] are the same handle
  liftU: string;
  liftV: string;
  c1Snap: boolean;
  selection: number | null;
}

export const defaultState = (): EditorState => ({
  points: [
    [Math.PI / 8, Math.PI / 4],
    [Math.PI / 8, (3 * Math.PI) / 8],
    [(3 * Math.PI) / 8, (3 * Math.PI) / 8],
    [(3 * Math.PI) / 8, Math.PI / 4],
    [(3 * Math.PI) / 8, Math.PI / 8],
    [Math.PI / 8, Math.PI / 8],
    [Math.PI / 8, Math.PI / 4],
  ],
  liftU: "u - v",
  liftV: "u + v",
  c1Snap: true,
  selection: null,
});

const clamp = (x: number, lo: number, hi: number): number =>
  Math.min(hi, Math.max(lo, x));

export interface DragOutcome {
  state: EditorState;
  clamped: boolean;
}

/** Move one control point; the closure handle moves both endpoints. */
export const dragControlPoint = (
  state: EditorState,
  index: number,
  target: Pair,
): DragOutcome => {
  if (index < 0 || index >= state.points.length) {
    throw new RangeError(`control point ${index} out of range`);
  }
  const u = clamp(target[0], DOMAIN_U[0], DOMAIN_U[1]);
  const v = clamp(target[1], DOMAIN_V[0], DOMAIN_V[1]);
  const clamped = u !== target[0] || v !== target[1];
  const points = state.points.map((p) => [...p] as Pair);
  points[index] = [u, v];
  const last = points.length - 1;
  if (index === 0) points[last] = [u, v];
  if (index === last) points[0] = [u, v];
  return { state: { ...state, points, selection: index }, clamped };
};

/** Apply the C1 snap on release: project p[n-2] onto the p1 - p0 line. */
export const releaseControlPoint = (
  state: EditorState,
  index: number,
): EditorState => {
  if (!state.c1Snap) return state;
  const n = state.points.length;
  if (n < 3) return state;
  const affected = index === 0 || index === 1 || index === n - 2 || index === n - 1;
  if (!affected) return state;
  const points = state.points.map((p) => [...p] as Pair);
  const p0 = points[0];
  const p1 = points[1];
  const du = p1[0] - p0[0];
  const dv = p1[1] - p0[1];
  const len2 = du * du + dv * dv;
  if (len2 < 1e-24) return state;
  const q = points[n - 2];
  const s = ((q[0] - p0[0]) * du + (q[1] - p0[1]) * dv) / len2;
  points[n - 2] = [p0[0] + s * du, p0[1] + s * dv];
  return { ...state, points };
};

/** Collinearity of the seam triple, for the snap indicator. */
export const seamIsC1 = (points: Pair[], tol = 1e-10): boolean => {
  const n = points.length;
  if (n < 3) return false;
  const [a, b, c] = [points[n - 2], points[0], points[1]];
  const area2 = Math.abs(
    (b[0] - a[0]) * (c[1] - a[1]) - (c[0] - a[0]) * (b[1] - a[1]),
  );
  return area2 < tol;
};

export const buildRequest = (
  state: EditorState,
  options: { samples?: number; meshNt?: number; meshNw?: number; wMin?: number; wMax?: number } = {},
): DesignRequest => ({
  control_points: state.points.map((p) => [...p] as Pair),
  lift: { u_bar: state.liftU, v_bar: state.liftV },
  samples: options.samples ?? 128,
  mesh_nt: options.meshNt ?? 64,
  mesh_nw: options.meshNw ?? 8,
  w_min: options.wMin ?? -1,
  w_max: options.wMax ?? 1,
});

// net files: JSON array of [u, v]; entries may be numbers or strings
// denoting rational multiples of pi ("pi/8", "3pi/8", "-pi/2")

const PI_PATTERN = /^\s*([+-]?)\s*(\d+(?:\.\d*)?)?\s*\*?\s*pi\s*(?:\/\s*(\d+(?:\.\d*)?))?\s*$/i;

export class NetFormatError extends Error {
  constructor(message: string, readonly position: number) {
    super(message);
  }
}

export const parseAngle = (value: unknown, position = 0): number => {
  if (typeof value === "number" && Number.isFinite(value)) return value;
  if (typeof value !== "string") {
    throw new NetFormatError(`expected number or angle string, got ${JSON.stringify(value)}`, position);
  }
  const m = PI_PATTERN.exec(value);
  if (m) {
    const sign = m[1] === "-" ? -1 : 1;
    const factor = m[2] ? Number(m[2]) : 1;
    const divisor = m[3] ? Number(m[3]) : 1;
    if (divisor === 0) throw new NetFormatError(`division by zero in ${value}`, position);
    return (sign * factor * Math.PI) / divisor;
  }
  const x = Number(value);
  if (!Number.isFinite(x)) throw new NetFormatError(`cannot parse angle ${JSON.stringify(value)}`, position);
  return x;
};

export const importNet = (text: string, state: EditorState): EditorState => {
  let data: unknown;
  try {
    data = JSON.parse(text);
  } catch (err) {
    const pos = err instanceof SyntaxError ? Number(/position (\d+)/.exec(err.message)?.[1] ?? 0) : 0;
    throw new NetFormatError(`invalid JSON: ${(err as Error).message}`, pos);
  }
  if (!Array.isArray(data) || data.length < 2) {
    throw new NetFormatError("net must be an array of at least two [u, v] pairs", 0);
  }
  const points: Pair[] = data.map((entry, i) => {
    if (!Array.isArray(entry) || entry.length !== 2) {
      throw new NetFormatError(`entry ${i} is not a [u, v] pair`, i);
    }
    return [parseAngle(entry[0], i), parseAngle(entry[1], i)];
  });
  return { ...state, points, selection: null };
};

export const exportNet = (state: EditorState): string => {
  const rows = state.points.map(([u, v]) => `  [${u}, ${v}]`);
  return `[\n${rows.join(",\n")}\n]\n`;
};

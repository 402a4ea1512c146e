/** Wire types and transport for the design service. */

export type Pair = [number, number];
export type Triple = [number, number, number];

export interface DesignRequest {
  control_points: (Pair | [string, string])[];
  lift: { u_bar: string; v_bar: string };
  samples?: number;
  mesh_nt?: number;
  mesh_nw?: number;
  w_min?: number;
  w_max?: number;
}

export interface ValidationReport {
  closed: boolean;
  c1: boolean;
  pole_proximity: number;
  domain_violations: number;
  warnings: string[];
}

export interface MeshPayload {
  vertices: Triple[];
  normals: Triple[];
  faces: [number, number, number][];
  striction: Triple[];
}

export interface ProfileRecord {
  t: number;
  kappa: number;
  kappa_bar: number;
  tau: number;
  tau_bar: number;
  delta: number;
  cot_sigma: number;
  flags: string[];
}

export interface Integrals {
  pitch: number;
  angle_of_pitch: number;
  striction_length: number;
  est_error: number;
}

export interface DesignResponse {
  validation: ValidationReport;
  mesh: MeshPayload;
  striction: Triple[];
  profile: ProfileRecord[];
  integrals: Integrals | null;
  warnings: string[];
}

export interface DesignResult {
  status: number;
  /** Exact response bytes as text; the invariant panel reads numbers from
   *  here verbatim so the UI never re-renders a double. */
  raw: string;
  body: DesignResponse | { error: string; position?: number };
}

export type Transport = (request: DesignRequest) => Promise<DesignResult>;

export const httpTransport = (baseUrl: string): Transport => {
  return async (request) => {
    const resp = await fetch(`${baseUrl}/api/design`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    const raw = await resp.text();
    return { status: resp.status, raw, body: JSON.parse(raw) };
  };
};

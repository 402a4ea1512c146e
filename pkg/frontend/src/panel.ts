/** Invariant readout assembly.
 *
 * Every number shown next to "pitch", "angle of pitch" and "striction
 * length" is the exact substring of the service response, extracted by
 * path; the UI never formats (and therefore never changes) a digit.
 */

import type { DesignResponse } from "./api.js";
import { rawNumbersAt } from "./rawjson.js";

export interface InvariantReadout {
  pitch: string;
  angleOfPitch: string;
  strictionLength: string;
  estError: string;
  badges: string[];
}

const INTEGRAL_PATHS = [
  "integrals.pitch",
  "integrals.angle_of_pitch",
  "integrals.striction_length",
  "integrals.est_error",
];

export const buildReadout = (raw: string, body: DesignResponse): InvariantReadout => {
  const numbers = body.integrals ? rawNumbersAt(raw, INTEGRAL_PATHS) : new Map<string, string>();
  const badges: string[] = [];
  if (!body.validation.c1) badges.push("not C1");
  const flagged = new Set(body.profile.flatMap((r) => r.flags));
  for (const flag of ["developable", "cylindrical", "pole"]) {
    if (flagged.has(flag)) badges.push(flag);
  }
  for (const warning of body.warnings) badges.push(warning);
  return {
    pitch: numbers.get("integrals.pitch") ?? "n/a",
    angleOfPitch: numbers.get("integrals.angle_of_pitch") ?? "n/a",
    strictionLength: numbers.get("integrals.striction_length") ?? "n/a",
    estError: numbers.get("integrals.est_error") ?? "n/a",
    badges,
  };
};

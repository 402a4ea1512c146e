import { describe, expect, it } from "vitest";

import {
  NetFormatError, buildRequest, defaultState, dragControlPoint, exportNet,
  importNet, parseAngle, releaseControlPoint, seamIsC1,
} from "../src/state.js";

describe("closure handle", () => {
  it("dragging p0 moves the last point identically", () => {
    const { state } = dragControlPoint(defaultState(), 0, [0.5, 1.25]);
    const n = state.points.length;
    expect(state.points[0]).toEqual([0.5, 1.25]);
    expect(state.points[n - 1]).toEqual([0.5, 1.25]);
  });

  it("dragging the last point moves p0", () => {
    const base = defaultState();
    const { state } = dragControlPoint(base, base.points.length - 1, [0.7, 0.9]);
    expect(state.points[0]).toEqual([0.7, 0.9]);
  });

  it("interior points move independently", () => {
    const base = defaultState();
    const { state } = dragControlPoint(base, 2, [1.0, 2.0]);
    expect(state.points[2]).toEqual([1.0, 2.0]);
    expect(state.points[0]).toEqual(base.points[0]);
  });

  it("clamps to the domain rectangle and reports it", () => {
    const { state, clamped } = dragControlPoint(defaultState(), 2, [9, -3]);
    expect(clamped).toBe(true);
    expect(state.points[2][0]).toBeCloseTo(Math.PI, 12);
    expect(state.points[2][1]).toBe(0);
  });

  it("rejects bad indices", () => {
    expect(() => dragControlPoint(defaultState(), 99, [0, 0])).toThrow(RangeError);
  });
});

describe("C1 snap", () => {
  it("projects p[n-2] onto the p1-p0 line on release", () => {
    let state = { ...defaultState(), c1Snap: true };
    state = dragControlPoint(state, state.points.length - 2, [1.1, 0.9]).state;
    expect(seamIsC1(state.points)).toBe(false);
    state = releaseControlPoint(state, state.points.length - 2);
    expect(seamIsC1(state.points)).toBe(true);
  });

  it("release of p1 also restores collinearity", () => {
    let state = { ...defaultState(), c1Snap: true };
    state = dragControlPoint(state, 1, [0.9, 1.9]).state;
    state = releaseControlPoint(state, 1);
    expect(seamIsC1(state.points)).toBe(true);
  });

  it("does nothing when the toggle is off", () => {
    let state = { ...defaultState(), c1Snap: false };
    state = dragControlPoint(state, state.points.length - 2, [1.1, 0.9]).state;
    const before = state.points.map((p) => [...p]);
    state = releaseControlPoint(state, state.points.length - 2);
    expect(state.points).toEqual(before);
  });

  it("leaves far-from-seam releases alone", () => {
    let state = { ...defaultState(), c1Snap: true };
    state = dragControlPoint(state, 3, [1.2, 0.4]).state;
    const before = state.points.map((p) => [...p]);
    state = releaseControlPoint(state, 3);
    expect(state.points).toEqual(before);
  });
});

describe("net import/export", () => {
  it("round-trips through the shared file format", () => {
    const state = defaultState();
    const text = exportNet(state);
    const again = importNet(text, defaultState());
    expect(again.points).toEqual(state.points);
  });

  it("accepts pi strings like the CLI", () => {
    const state = importNet('[["pi/8", "pi/4"], ["3pi/8", "0.5"], ["pi/8", "pi/4"]]', defaultState());
    expect(state.points[0][0]).toBeCloseTo(Math.PI / 8, 15);
    expect(state.points[1][0]).toBeCloseTo((3 * Math.PI) / 8, 15);
    expect(state.points[1][1]).toBe(0.5);
  });

  it("reports the failing position for malformed files", () => {
    expect(() => importNet("{nope", defaultState())).toThrow(NetFormatError);
    try {
      importNet('[["pi/8", "pie/4"], [0, 0]]', defaultState());
      expect.unreachable();
    } catch (err) {
      expect(err).toBeInstanceOf(NetFormatError);
      expect((err as NetFormatError).position).toBe(0);
    }
    try {
      importNet("[[0, 1], [2]]", defaultState());
      expect.unreachable();
    } catch (err) {
      expect((err as NetFormatError).position).toBe(1);
    }
  });

  it("an exported net reproduces an identical design request", () => {
    const state = defaultState();
    const again = importNet(exportNet(state), defaultState());
    expect(buildRequest(again)).toEqual(buildRequest(state));
  });
});

describe("parseAngle", () => {
  it.each([
    ["pi", Math.PI],
    ["pi/8", Math.PI / 8],
    ["3pi/8", (3 * Math.PI) / 8],
    ["2*pi/3", (2 * Math.PI) / 3],
    ["-pi", -Math.PI],
    ["0.75", 0.75],
  ])("parses %s", (text, expected) => {
    expect(parseAngle(text)).toBeCloseTo(expected, 15);
  });

  it("rejects garbage", () => {
    expect(() => parseAngle("pie/8")).toThrow(NetFormatError);
    expect(() => parseAngle(null)).toThrow(NetFormatError);
  });
});

/** Debounced design-request scheduler with stale-response discard.
 *
 * During a continuous drag at most one request leaves per window
 * (default 100 ms), always carrying the latest state; the trailing edge
 * fires so the final position is never lost.  Every send gets a
 * sequence number and responses are dropped unless their sequence is
 * newer than the last one applied, so out-of-order arrivals can never
 * overwrite fresher geometry.
 */

import type { DesignRequest, DesignResult, Transport } from "./api.js";

export interface Clock {
  now(): number;
  setTimeout(fn: () => void, ms: number): unknown;
  clearTimeout(handle: unknown): void;
}

export const realClock: Clock = {
  now: () => Date.now(),
  setTimeout: (fn, ms) => setTimeout(fn, ms),
  clearTimeout: (handle) => clearTimeout(handle as ReturnType<typeof setTimeout>),
};

export class DesignScheduler {
  private lastSendAt = -Infinity;
  private pending: DesignRequest | null = null;
  private timer: unknown = null;
  private sendSeq = 0;
  private appliedSeq = 0;
  private inFlight = 0;

  constructor(
    private readonly transport: Transport,
    private readonly onResult: (result: DesignResult, seq: number) => void,
    private readonly debounceMs = 100,
    private readonly clock: Clock = realClock,
    private readonly onError: (err: unknown) => void = () => {},
  ) {}

  /** Schedule a request for this state; may fire now or on the trailing edge. */
  request(body: DesignRequest): void {
    const now = this.clock.now();
    const due = this.lastSendAt + this.debounceMs;
    if (now >= due) {
      this.fire(body, now);
      return;
    }
    this.pending = body;
    if (this.timer === null) {
      this.timer = this.clock.setTimeout(() => this.flush(), due - now);
    }
  }

  /** Number of requests handed to the transport so far. */
  get sent(): number {
    return this.sendSeq;
  }

  get inFlightCount(): number {
    return this.inFlight;
  }

  private flush(): void {
    this.timer = null;
    if (this.pending === null) return;
    const body = this.pending;
    this.pending = null;
    this.fire(body, this.clock.now());
  }

  private fire(body: DesignRequest, at: number): void {
    this.lastSendAt = at;
    const seq = ++this.sendSeq;
    this.inFlight += 1;
    this.transport(body)
      .then((result) => {
        if (seq > this.appliedSeq) {
          this.appliedSeq = seq;
          this.onResult(result, seq);
        }
      })
      .catch((err) => this.onError(err))
      .finally(() => {
        this.inFlight -= 1;
      });
  }
}

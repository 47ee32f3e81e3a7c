/** One player's progress through one puzzle.
 *
 * Invariant kept throughout: replaying `history` from the instance's initial
 * configuration reproduces `current`. Only legal swaps ever enter the
 * history, so undo can simply re-apply the swap (swaps are involutions).
 */

import type { Api, SolveResponse } from "./api.js";
import { ApiError } from "./api.js";
import type { Edge, InstanceDoc } from "./model.js";
import { applySwap, configsEqual, isLegalSwap } from "./model.js";

export type Hint =
  | { kind: "move"; move: Edge }
  | { kind: "goal" }
  | { kind: "unsolvable" }
  | { kind: "budget" };

export const HINT_MAX_STATES = 200_000;

export class Session {
  current: number[];
  history: Edge[] = [];
  selected: number | null = null;
  goalReached: boolean;
  private hintInFlight = false;

  constructor(readonly instance: InstanceDoc) {
    this.current = [...instance.initial];
    this.goalReached = this.checkGoal();
  }

  static async load(api: Api, id: string): Promise<Session> {
    return new Session(await api.getInstance(id));
  }

  checkGoal(): boolean {
    return configsEqual(this.current, this.instance.final);
  }

  /** Apply the swap if it is legal; report whether anything changed. */
  attemptSwap(u: number, v: number): boolean {
    if (!isLegalSwap(this.instance, this.current, u, v)) {
      return false;
    }
    this.current = applySwap(this.current, u, v);
    this.history.push(u < v ? [u, v] : [v, u]);
    this.goalReached = this.checkGoal();
    return true;
  }

  undo(): boolean {
    const last = this.history.pop();
    if (!last) {
      return false;
    }
    this.current = applySwap(this.current, last[0], last[1]);
    this.goalReached = this.checkGoal();
    return true;
  }

  reset(): void {
    this.current = [...this.instance.initial];
    this.history = [];
    this.selected = null;
    this.goalReached = this.checkGoal();
  }

  /** Click-to-swap selection: first click arms a vertex, second click tries
   * the swap. Returns "swapped", "selected", "cleared", or "rejected". */
  clickVertex(v: number): "swapped" | "selected" | "cleared" | "rejected" {
    if (this.selected === null) {
      this.selected = v;
      return "selected";
    }
    if (this.selected === v) {
      this.selected = null;
      return "cleared";
    }
    const u = this.selected;
    this.selected = null;
    return this.attemptSwap(u, v) ? "swapped" : "rejected";
  }

  /** Ask the server for the next move from the current configuration.
   *
   * At most one request may be in flight; callers should disable the button
   * until the promise settles.
   */
  async requestHint(api: Api, maxStates: number = HINT_MAX_STATES): Promise<Hint> {
    if (this.hintInFlight) {
      throw new Error("a hint request is already in flight");
    }
    this.hintInFlight = true;
    try {
      const fromHere: InstanceDoc = { ...this.instance, initial: [...this.current] };
      let outcome: SolveResponse;
      try {
        outcome = await api.solve({ instance: fromHere, max_states: maxStates });
      } catch (err) {
        if (err instanceof ApiError && err.status === 429) {
          return { kind: "budget" };
        }
        throw err;
      }
      if (outcome.status === "unsolvable") {
        return { kind: "unsolvable" };
      }
      if (outcome.status === "limit_exceeded") {
        return { kind: "budget" };
      }
      const move = outcome.witness?.[0];
      if (!move) {
        return { kind: "goal" };
      }
      return { kind: "move", move };
    } finally {
      this.hintInFlight = false;
    }
  }
}

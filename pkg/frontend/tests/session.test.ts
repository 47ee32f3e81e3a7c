import { describe, expect, it } from "vitest";

import { Api } from "../src/api.js";
import { applySwap, legalSwaps } from "../src/model.js";
import { Session } from "../src/session.js";
import {
  apiReturning,
  jsonResponse,
  readFixture,
  type CapturedResponses,
  type TeaserFixture,
} from "./helpers.js";

const teaser = readFixture<TeaserFixture>("teaser.json");
const responses = readFixture<CapturedResponses>("server_responses.json");

function freshSession(): Session {
  return new Session(structuredClone(teaser.doc));
}

describe("session moves", () => {
  it("applies legal swaps and records history", () => {
    const session = freshSession();
    const [u, v] = teaser.witness[0]!;
    expect(session.attemptSwap(u, v)).toBe(true);
    expect(session.history).toEqual([[u, v]]);
    expect(session.current).toEqual(applySwap(teaser.doc.initial, u, v));
  });

  it("rejects illegal swaps without changing anything", () => {
    const session = freshSession();
    const before = structuredClone(session.current);
    // vertices 3 and 7 are grid neighbors but hold colors 4 and 1,
    // which are not adjacent in the path swap graph
    expect(session.attemptSwap(3, 7)).toBe(false);
    expect(session.attemptSwap(0, 7)).toBe(false); // not even base-adjacent
    expect(session.current).toEqual(before);
    expect(session.history).toEqual([]);
  });

  it("undo is an exact inverse", () => {
    const session = freshSession();
    session.attemptSwap(...teaser.witness[0]!);
    const snapshot = {
      current: structuredClone(session.current),
      history: structuredClone(session.history),
      goal: session.goalReached,
    };
    session.attemptSwap(...teaser.witness[1]!);
    expect(session.undo()).toBe(true);
    expect(session.current).toEqual(snapshot.current);
    expect(session.history).toEqual(snapshot.history);
    expect(session.goalReached).toBe(snapshot.goal);
  });

  it("undo on a fresh session reports nothing to undo", () => {
    const session = freshSession();
    expect(session.undo()).toBe(false);
  });

  it("reset returns to the initial configuration and clears history", () => {
    const session = freshSession();
    session.attemptSwap(...teaser.witness[0]!);
    session.selected = 3;
    session.reset();
    expect(session.current).toEqual(teaser.doc.initial);
    expect(session.history).toEqual([]);
    expect(session.selected).toBeNull();
  });

  it("reports the goal immediately when initial equals final", () => {
    const doc = structuredClone(teaser.doc);
    doc.final = [...doc.initial];
    expect(new Session(doc).goalReached).toBe(true);
  });

  it("replaying history from the initial configuration gives the current one", () => {
    const session = freshSession();
    let seed = 97;
    const nextRandom = () => {
      seed = (seed * 48271) % 2147483647;
      return seed / 2147483647;
    };
    for (let step = 0; step < 40; step += 1) {
      const moves = legalSwaps(session.instance, session.current);
      const choice = moves[Math.floor(nextRandom() * moves.length)]!;
      expect(session.attemptSwap(...choice)).toBe(true);
    }
    let replayed = [...session.instance.initial];
    for (const [u, v] of session.history) {
      replayed = applySwap(replayed, u, v);
    }
    expect(replayed).toEqual(session.current);
  });

  it("click-to-swap selects, clears, swaps, and rejects", () => {
    const session = freshSession();
    const [u, v] = teaser.witness[0]!;
    expect(session.clickVertex(u)).toBe("selected");
    expect(session.selected).toBe(u);
    expect(session.clickVertex(u)).toBe("cleared");
    expect(session.selected).toBeNull();
    session.clickVertex(u);
    expect(session.clickVertex(v)).toBe("swapped");
    expect(session.history.length).toBe(1);
    session.clickVertex(3);
    expect(session.clickVertex(7)).toBe("rejected");
    expect(session.selected).toBeNull();
  });
});

describe("hints", () => {
  it("surfaces the first witness move", async () => {
    const session = freshSession();
    const hint = await session.requestHint(apiReturning(responses.solve_near_goal!));
    expect(hint).toEqual({ kind: "move", move: [6, 7] });
  });

  it("reports an already-solved board", async () => {
    const session = freshSession();
    const hint = await session.requestHint(apiReturning(responses.solve_at_goal!));
    expect(hint).toEqual({ kind: "goal" });
  });

  it("reports unsolvable positions", async () => {
    const session = freshSession();
    const hint = await session.requestHint(apiReturning(responses.solve_unsolvable!));
    expect(hint).toEqual({ kind: "unsolvable" });
  });

  it("maps a truncated search to the budget message", async () => {
    const session = freshSession();
    const hint = await session.requestHint(apiReturning(responses.solve_truncated!));
    expect(hint).toEqual({ kind: "budget" });
  });

  it("maps an over-cap request (429) to the budget message", async () => {
    const session = freshSession();
    const hint = await session.requestHint(apiReturning(responses.solve_budget!));
    expect(hint).toEqual({ kind: "budget" });
  });

  it("posts the current configuration, not the instance's initial one", async () => {
    const session = freshSession();
    session.attemptSwap(...teaser.witness[0]!);
    let posted: { instance?: { initial?: number[] } } = {};
    const api = new Api("", async (_input, init) => {
      posted = JSON.parse(String(init?.body)) as typeof posted;
      return jsonResponse(responses.solve_near_goal!);
    });
    await session.requestHint(api);
    expect(posted.instance?.initial).toEqual(session.current);
  });

  it("allows at most one in-flight request", async () => {
    const session = freshSession();
    let release!: () => void;
    const gate = new Promise<void>((resolve) => {
      release = resolve;
    });
    const api = new Api("", async () => {
      await gate;
      return jsonResponse(responses.solve_near_goal!);
    });
    const first = session.requestHint(api);
    await expect(session.requestHint(api)).rejects.toThrow(/in flight/);
    release();
    expect((await first).kind).toBe("move");
    // settled, so a new request is allowed again
    const second = await session.requestHint(apiReturning(responses.solve_at_goal!));
    expect(second.kind).toBe("goal");
  });
});

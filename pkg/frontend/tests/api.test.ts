import { describe, expect, it } from "vitest";

import { Api, ApiError, type DecideResponse, type SolveResponse } from "../src/api.js";
import {
  jsonResponse,
  readFixture,
  type Captured,
  type CapturedResponses,
} from "./helpers.js";

const responses = readFixture<CapturedResponses>("server_responses.json");

interface Call {
  input: string;
  init?: RequestInit;
}

function recordingApi(captured: Captured, calls: Call[]): Api {
  return new Api("", async (input, init) => {
    calls.push({ input, init });
    return jsonResponse(captured);
  });
}

describe("api client", () => {
  it("lists instances", async () => {
    const calls: Call[] = [];
    const listing = await recordingApi(responses.listing!, calls).listInstances();
    expect(calls[0]?.input).toBe("/api/instances");
    expect(listing.map((entry) => entry.id)).toEqual(["cycle-6", "grid-2x3", "teaser"]);
  });

  it("fetches one instance by id, encoding the path", async () => {
    const calls: Call[] = [];
    const api = recordingApi(responses.instance_teaser!, calls);
    const doc = await api.getInstance("teaser");
    expect(calls[0]?.input).toBe("/api/instances/teaser");
    expect(doc.base_graph.n).toBe(8);
    await api.getInstance("a b");
    expect(calls[1]?.input).toBe("/api/instances/a%20b");
  });

  it("maps a missing instance to ApiError 404 with the server detail", async () => {
    const api = recordingApi(responses.instance_missing!, []);
    const failure = api.getInstance("nope");
    await expect(failure).rejects.toBeInstanceOf(ApiError);
    await expect(api.getInstance("nope")).rejects.toMatchObject({
      status: 404,
      message: "unknown instance",
    });
  });

  it("posts solve requests as JSON", async () => {
    const calls: Call[] = [];
    const api = recordingApi(responses.solve_truncated!, calls);
    const outcome: SolveResponse = await api.solve({ id: "teaser", max_states: 10 });
    expect(calls[0]?.input).toBe("/api/solve");
    expect(calls[0]?.init?.method).toBe("POST");
    expect(calls[0]?.init?.headers).toMatchObject({ "content-type": "application/json" });
    expect(JSON.parse(String(calls[0]?.init?.body))).toEqual({ id: "teaser", max_states: 10 });
    expect(outcome.status).toBe("limit_exceeded");
    expect(outcome.witness).toBeNull();
  });

  it("surfaces the 429 budget cap as ApiError", async () => {
    const api = recordingApi(responses.solve_budget!, []);
    await expect(api.solve({ id: "teaser", max_states: 5_000_000 })).rejects.toMatchObject({
      status: 429,
      message: "max_states capped at 2000000",
    });
  });

  it("parses decide verdicts with their classes", async () => {
    const calls: Call[] = [];
    const api = recordingApi(responses.decide_grid!, calls);
    const body = responses.decide_grid!.body as DecideResponse;
    const verdict = await api.decide({
      name: "ignored",
      base_graph: { n: 1, edges: [] },
      swap_graph: { k: 2, edges: [[1, 2]] },
      initial: [1],
      final: [1],
    });
    expect(calls[0]?.input).toBe("/api/decide");
    expect(verdict.solvable).toBe(body.solvable);
    expect(verdict.classes[0]?.C).toEqual([1, 2, 3, 4, 5]);
  });

  it("falls back to the status line when an error body is not JSON", async () => {
    const api = new Api("", async () =>
      new Response("boom", { status: 500, statusText: "Internal Server Error" }));
    await expect(api.listInstances()).rejects.toMatchObject({
      status: 500,
      message: "Internal Server Error",
    });
  });

  it("prefixes a configured base URL", async () => {
    const calls: Call[] = [];
    const api = new Api("http://example.test:8000", async (input, init) => {
      calls.push({ input, init });
      return jsonResponse(responses.listing!);
    });
    await api.listInstances();
    expect(calls[0]?.input).toBe("http://example.test:8000/api/instances");
  });
});

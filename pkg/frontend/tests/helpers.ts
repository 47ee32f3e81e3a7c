import { readFileSync } from "node:fs";

import { Api } from "../src/api.js";
import type { InstanceDoc } from "../src/model.js";

export function readFixture<T>(name: string): T {
  const url = new URL(`fixtures/${name}`, import.meta.url);
  return JSON.parse(readFileSync(url, "utf8")) as T;
}

export interface Captured {
  status: number;
  body: unknown;
}

export type CapturedResponses = Record<string, Captured>;

export function jsonResponse(captured: Captured): Response {
  return new Response(JSON.stringify(captured.body), {
    status: captured.status,
    headers: { "content-type": "application/json" },
  });
}

/** An Api whose every request gets the same captured server response. */
export function apiReturning(captured: Captured): Api {
  return new Api("", async () => jsonResponse(captured));
}

export interface LegalityFixture {
  instances: {
    doc: InstanceDoc;
    cases: { config: number[]; legal: [number, number][] }[];
  }[];
}

export interface TeaserFixture {
  doc: InstanceDoc;
  witness: [number, number][];
  states_explored: number;
}

/** Thin fetch client for the solver service. */

import type { Edge, InstanceDoc } from "./model.js";

export interface ListedInstance {
  id: string;
  name: string;
}

export type SearchStatus = "solvable" | "unsolvable" | "limit_exceeded";

export interface SolveResponse {
  status: SearchStatus;
  witness: Edge[] | null;
  states_explored: number;
}

export interface SolveRequest {
  id?: string;
  instance?: InstanceDoc;
  max_states?: number;
}

export interface ClassVerdict {
  C: number[];
  R: number[];
  verdict: string;
}

export interface DecideResponse {
  solvable: boolean;
  reason: string;
  classes: ClassVerdict[];
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

async function errorFrom(response: Response): Promise<ApiError> {
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") {
      detail = body.detail;
    }
  } catch {
    // non-JSON error body; the status line is all we have
  }
  return new ApiError(response.status, detail);
}

export class Api {
  private readonly fetchFn: FetchLike;

  constructor(
    readonly baseUrl: string = "",
    fetchFn?: FetchLike,
  ) {
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  private async getJson<T>(path: string): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path);
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return (await response.json()) as T;
  }

  private async postJson<T>(path: string, body: unknown): Promise<T> {
    const response = await this.fetchFn(this.baseUrl + path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw await errorFrom(response);
    }
    return (await response.json()) as T;
  }

  listInstances(): Promise<ListedInstance[]> {
    return this.getJson("/api/instances");
  }

  getInstance(id: string): Promise<InstanceDoc> {
    return this.getJson(`/api/instances/${encodeURIComponent(id)}`);
  }

  solve(request: SolveRequest): Promise<SolveResponse> {
    return this.postJson("/api/solve", request);
  }

  decide(instance: InstanceDoc): Promise<DecideResponse> {
    return this.postJson("/api/decide", { instance });
  }
}

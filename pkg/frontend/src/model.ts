/** Wire types for instance documents, plus the client-side legality rule.
 *
 * The shapes mirror the server's JSON exactly; nothing here is solver logic,
 * only the single-move rule: a swap needs adjacency in the base graph and
 * color adjacency in the swap graph.
 */

export type Edge = [number, number];

export interface GraphDoc {
  n: number;
  edges: Edge[];
  labels?: string[];
}

export interface SwapGraphDoc {
  k: number;
  edges: Edge[];
  labels?: string[];
}

export interface InstanceDoc {
  name: string;
  base_graph: GraphDoc;
  swap_graph: SwapGraphDoc;
  initial: number[];
  final: number[];
  layout?: [number, number][];
}

export type Config = readonly number[];

function edgeKey(u: number, v: number): number {
  return u < v ? u * 65536 + v : v * 65536 + u;
}

const baseSets = new WeakMap<InstanceDoc, Set<number>>();
const swapSets = new WeakMap<InstanceDoc, Set<number>>();

function edgeSet(
  cache: WeakMap<InstanceDoc, Set<number>>,
  inst: InstanceDoc,
  edges: Edge[],
): Set<number> {
  let set = cache.get(inst);
  if (!set) {
    set = new Set(edges.map(([u, v]) => edgeKey(u, v)));
    cache.set(inst, set);
  }
  return set;
}

export function baseAdjacent(inst: InstanceDoc, u: number, v: number): boolean {
  return edgeSet(baseSets, inst, inst.base_graph.edges).has(edgeKey(u, v));
}

export function colorsAdjacent(inst: InstanceDoc, a: number, b: number): boolean {
  return edgeSet(swapSets, inst, inst.swap_graph.edges).has(edgeKey(a, b));
}

/** The one rule the client is allowed to know. Same-color swaps are never
 * legal because the swap graph has no self-loops. */
export function isLegalSwap(inst: InstanceDoc, config: Config, u: number, v: number): boolean {
  if (u === v || u < 0 || v < 0 || u >= inst.base_graph.n || v >= inst.base_graph.n) {
    return false;
  }
  const a = config[u];
  const b = config[v];
  if (a === undefined || b === undefined) {
    return false;
  }
  return baseAdjacent(inst, u, v) && colorsAdjacent(inst, a, b);
}

export function legalSwaps(inst: InstanceDoc, config: Config): Edge[] {
  const out: Edge[] = [];
  for (const [u, v] of inst.base_graph.edges) {
    if (isLegalSwap(inst, config, u, v)) {
      out.push(u < v ? [u, v] : [v, u]);
    }
  }
  out.sort((p, q) => p[0] - q[0] || p[1] - q[1]);
  return out;
}

export function applySwap(config: Config, u: number, v: number): number[] {
  const next = [...config];
  const a = next[u];
  const b = next[v];
  if (a === undefined || b === undefined) {
    throw new RangeError(`swap (${u}, ${v}) is out of range`);
  }
  next[u] = b;
  next[v] = a;
  return next;
}

export function configsEqual(a: Config, b: Config): boolean {
  return a.length === b.length && a.every((x, i) => x === b[i]);
}

/** Short text shown inside a vertex: the color's swap-graph label when the
 * instance has one (two letters keeps fox/farmer distinguishable), else the
 * color number itself. */
export function glyphFor(inst: InstanceDoc, color: number): string {
  const label = inst.swap_graph.labels?.[color - 1];
  if (!label) {
    return String(color);
  }
  return label.charAt(0).toUpperCase() + label.slice(1, 2);
}

/** SVG board drawing. Everything stateful lives in main.ts; this module
 * only turns (instance, positions, configuration) into elements. */

import type { InstanceDoc } from "./model.js";
import { glyphFor } from "./model.js";
import type { Point } from "./layout.js";

const SVG_NS = "http://www.w3.org/2000/svg";

// One fill per color index; color 1 stays pale because star-centered
// instances treat it as the blank.
const PALETTE = [
  "#f4f1ea",
  "#e4572e",
  "#2e86ab",
  "#76b041",
  "#9a48d0",
  "#f5b700",
  "#d81159",
  "#4f6d7a",
];

export function colorFill(color: number): string {
  return PALETTE[(color - 1) % PALETTE.length] ?? PALETTE[0]!;
}

export function vertexTitle(inst: InstanceDoc, vertex: number, color: number): string {
  const vertexLabel = inst.base_graph.labels?.[vertex] ?? String(vertex);
  const colorLabel = inst.swap_graph.labels?.[color - 1] ?? `color ${color}`;
  return `${vertexLabel}: ${colorLabel}`;
}

export interface BoardOptions {
  radius?: number;
  onVertexClick?: (vertex: number) => void;
  /** Swap edge endpoints to pulse as the current hint, if any. */
  hint?: [number, number] | null;
  selected?: number | null;
}

export function drawBoard(
  svg: SVGSVGElement,
  inst: InstanceDoc,
  positions: Point[],
  config: readonly number[],
  options: BoardOptions = {},
): void {
  const radius = options.radius ?? 22;
  while (svg.firstChild) {
    svg.removeChild(svg.firstChild);
  }
  const hint = options.hint ?? null;
  for (const [u, v] of inst.base_graph.edges) {
    const line = document.createElementNS(SVG_NS, "line");
    const [ux, uy] = positions[u]!;
    const [vx, vy] = positions[v]!;
    line.setAttribute("x1", String(ux));
    line.setAttribute("y1", String(uy));
    line.setAttribute("x2", String(vx));
    line.setAttribute("y2", String(vy));
    line.setAttribute("class", hint && hint[0] === Math.min(u, v) && hint[1] === Math.max(u, v)
      ? "edge hint"
      : "edge");
    svg.appendChild(line);
  }
  config.forEach((color, vertex) => {
    const group = document.createElementNS(SVG_NS, "g");
    group.setAttribute("class", vertex === options.selected ? "vertex selected" : "vertex");
    group.setAttribute("data-vertex", String(vertex));
    const [x, y] = positions[vertex]!;
    const circle = document.createElementNS(SVG_NS, "circle");
    circle.setAttribute("cx", String(x));
    circle.setAttribute("cy", String(y));
    circle.setAttribute("r", String(radius));
    circle.setAttribute("fill", colorFill(color));
    const text = document.createElementNS(SVG_NS, "text");
    text.setAttribute("x", String(x));
    text.setAttribute("y", String(y + 5));
    text.setAttribute("text-anchor", "middle");
    text.textContent = glyphFor(inst, color);
    const title = document.createElementNS(SVG_NS, "title");
    title.textContent = vertexTitle(inst, vertex, color);
    group.appendChild(circle);
    group.appendChild(text);
    group.appendChild(title);
    if (options.onVertexClick) {
      group.addEventListener("click", () => options.onVertexClick!(vertex));
    }
    svg.appendChild(group);
  });
}

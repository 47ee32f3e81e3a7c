/** Vertex coordinates for the board.
 *
 * Instances may ship a "layout" field with precomputed positions; anything
 * without one gets a deterministic force-directed embedding (circle start,
 * fixed iteration count, no randomness, so reloads look identical).
 */

import type { InstanceDoc } from "./model.js";

export interface Viewport {
  width: number;
  height: number;
  margin: number;
}

export const DEFAULT_VIEWPORT: Viewport = { width: 640, height: 420, margin: 42 };

export type Point = [number, number];

function fitToViewport(points: Point[], view: Viewport): Point[] {
  const xs = points.map((p) => p[0]);
  const ys = points.map((p) => p[1]);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const spanX = maxX - minX || 1;
  const spanY = maxY - minY || 1;
  const scale = Math.min(
    (view.width - 2 * view.margin) / spanX,
    (view.height - 2 * view.margin) / spanY,
  );
  const offsetX = (view.width - spanX * scale) / 2;
  const offsetY = (view.height - spanY * scale) / 2;
  return points.map(([x, y]) => [
    offsetX + (x - minX) * scale,
    offsetY + (y - minY) * scale,
  ]);
}

function forceDirected(inst: InstanceDoc): Point[] {
  const n = inst.base_graph.n;
  if (n === 1) {
    return [[0, 0]];
  }
  const pos: Point[] = [];
  for (let v = 0; v < n; v += 1) {
    const angle = (2 * Math.PI * v) / n;
    pos.push([Math.cos(angle), Math.sin(angle)]);
  }
  const ideal = Math.sqrt(4 / n);
  for (let round = 0; round < 220; round += 1) {
    const step = 0.08 * (1 - round / 220) + 0.002;
    const force: Point[] = pos.map(() => [0, 0]);
    for (let u = 0; u < n; u += 1) {
      for (let v = u + 1; v < n; v += 1) {
        const dx = pos[u]![0] - pos[v]![0];
        const dy = pos[u]![1] - pos[v]![1];
        const dist = Math.hypot(dx, dy) || 1e-6;
        const push = (ideal * ideal) / dist / dist;
        force[u]![0] += dx * push;
        force[u]![1] += dy * push;
        force[v]![0] -= dx * push;
        force[v]![1] -= dy * push;
      }
    }
    for (const [u, v] of inst.base_graph.edges) {
      const dx = pos[u]![0] - pos[v]![0];
      const dy = pos[u]![1] - pos[v]![1];
      const dist = Math.hypot(dx, dy) || 1e-6;
      const pull = dist / ideal;
      force[u]![0] -= dx * pull;
      force[u]![1] -= dy * pull;
      force[v]![0] += dx * pull;
      force[v]![1] += dy * pull;
    }
    for (let v = 0; v < n; v += 1) {
      const fx = force[v]![0];
      const fy = force[v]![1];
      const mag = Math.hypot(fx, fy) || 1e-6;
      const clamp = Math.min(mag, 1);
      pos[v]![0] += (fx / mag) * clamp * step;
      pos[v]![1] += (fy / mag) * clamp * step;
    }
  }
  return pos;
}

export function layoutFor(inst: InstanceDoc, view: Viewport = DEFAULT_VIEWPORT): Point[] {
  const shipped = inst.layout;
  if (shipped && shipped.length === inst.base_graph.n) {
    return fitToViewport(shipped.map(([x, y]) => [x, y] as Point), view);
  }
  return fitToViewport(forceDirected(inst), view);
}

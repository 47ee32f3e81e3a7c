/** Page wiring: instance picker, the playable board, goal panel, controls. */

import { Api, ApiError } from "./api.js";
import { DEFAULT_VIEWPORT, layoutFor } from "./layout.js";
import type { Edge } from "./model.js";
import { drawBoard } from "./render.js";
import { Session } from "./session.js";

const api = new Api();

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) {
    throw new Error(`missing #${id}`);
  }
  return node as T;
}

const boardSvg = document.getElementById("board") as unknown as SVGSVGElement;
const goalSvg = document.getElementById("goal") as unknown as SVGSVGElement;
const picker = el<HTMLSelectElement>("picker");
const status = el<HTMLElement>("status");
const banner = el<HTMLElement>("banner");
const moveCount = el<HTMLElement>("move-count");
const undoButton = el<HTMLButtonElement>("undo");
const resetButton = el<HTMLButtonElement>("reset");
const hintButton = el<HTMLButtonElement>("hint");

let session: Session | null = null;
let hint: Edge | null = null;

function showBanner(text: string): void {
  banner.textContent = text;
  banner.classList.remove("hidden");
}

function clearBanner(): void {
  banner.classList.add("hidden");
}

function shake(): void {
  boardSvg.classList.remove("shake");
  // restart the animation even on back-to-back rejections
  void boardSvg.getBoundingClientRect().width;
  boardSvg.classList.add("shake");
}

function redraw(): void {
  if (!session) {
    return;
  }
  const positions = layoutFor(session.instance);
  drawBoard(boardSvg, session.instance, positions, session.current, {
    onVertexClick: handleClick,
    selected: session.selected,
    hint,
  });
  const goalView = { ...DEFAULT_VIEWPORT, width: 300, height: 200, margin: 26 };
  drawBoard(goalSvg, session.instance, layoutFor(session.instance, goalView),
    session.instance.final, { radius: 12 });
  moveCount.textContent = `${session.history.length} move${session.history.length === 1 ? "" : "s"}`;
  status.textContent = session.goalReached
    ? "Goal reached!"
    : session.selected === null
      ? "Pick a token to move."
      : "Pick a neighbor to swap with.";
  status.classList.toggle("goal", session.goalReached);
  undoButton.disabled = session.history.length === 0;
}

function handleClick(vertex: number): void {
  if (!session) {
    return;
  }
  hint = null;
  const result = session.clickVertex(vertex);
  if (result === "rejected") {
    shake();
  }
  redraw();
}

async function loadSelected(): Promise<void> {
  clearBanner();
  hint = null;
  try {
    session = await Session.load(api, picker.value);
    redraw();
  } catch (err) {
    session = null;
    showBanner(err instanceof ApiError
      ? `Could not load instance (${err.status}): ${err.message}`
      : "Could not reach the server.");
  }
}

async function requestHint(): Promise<void> {
  if (!session) {
    return;
  }
  hintButton.disabled = true;
  try {
    const answer = await session.requestHint(api);
    if (answer.kind === "move") {
      hint = answer.move;
      status.textContent = `Hint: swap ${answer.move[0]} and ${answer.move[1]}.`;
    } else if (answer.kind === "goal") {
      status.textContent = "Already at the goal.";
    } else if (answer.kind === "unsolvable") {
      status.textContent = "Unsolvable from here; undo or reset.";
    } else {
      status.textContent = "Hint budget exceeded; try a smaller puzzle.";
    }
    if (hint && session) {
      const positions = layoutFor(session.instance);
      drawBoard(boardSvg, session.instance, positions, session.current, {
        onVertexClick: handleClick,
        selected: session.selected,
        hint,
      });
    }
  } catch {
    status.textContent = "Hint request failed.";
  } finally {
    hintButton.disabled = false;
  }
}

async function boot(): Promise<void> {
  try {
    const instances = await api.listInstances();
    picker.replaceChildren(...instances.map(({ id, name }) => {
      const option = document.createElement("option");
      option.value = id;
      option.textContent = name;
      return option;
    }));
    const teaser = instances.find((entry) => entry.id === "teaser");
    if (teaser) {
      picker.value = teaser.id;
    }
    await loadSelected();
  } catch {
    showBanner("Could not reach the server.");
  }
}

picker.addEventListener("change", () => void loadSelected());
undoButton.addEventListener("click", () => {
  if (session) {
    hint = null;
    session.undo();
    redraw();
  }
});
resetButton.addEventListener("click", () => {
  if (session) {
    hint = null;
    session.reset();
    redraw();
  }
});
hintButton.addEventListener("click", () => void requestHint());

void boot();

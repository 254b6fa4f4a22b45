// Canvas drawing for the piano roll and the oracle view. Geometry comes
// from layout.ts; this file only paints.

import { layoutOracle, layoutRoll } from "./layout.js";
import { Snapshot } from "./protocol.js";
import { RollNote, UiState } from "./state.js";

const INPUT_COLOR = "#4a90d9";
const OUTPUT_COLOR = "#d97a4a";

export function drawRoll(canvas: HTMLCanvasElement, notes: RollNote[]): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const { rects } = layoutRoll(notes, canvas.width, canvas.height, 64);
  for (const r of rects) {
    ctx.fillStyle = r.lane === "input" ? INPUT_COLOR : OUTPUT_COLOR;
    ctx.globalAlpha = 0.35 + 0.65 * (r.vel / 127);
    ctx.fillRect(r.x, r.y, r.w, r.h);
  }
  ctx.globalAlpha = 1;
}

export function drawOracle(canvas: HTMLCanvasElement, snap: Snapshot): void {
  const ctx = canvas.getContext("2d");
  if (!ctx) return;
  ctx.clearRect(0, 0, canvas.width, canvas.height);
  const midY = canvas.height / 2;
  const { dots, arcs } = layoutOracle(snap, canvas.width, midY);
  const xOf = new Map(dots.map((d) => [d.id, d.x]));

  for (const arc of arcs) {
    const x1 = xOf.get(arc.from)!;
    const x2 = xOf.get(arc.to)!;
    ctx.beginPath();
    ctx.moveTo(x1, midY);
    ctx.quadraticCurveTo((x1 + x2) / 2, midY - arc.lift * 2, x2, midY);
    ctx.lineWidth = arc.thickness;
    ctx.strokeStyle = arc.kind === "factor" ? "#666" : "#b06bc4";
    ctx.stroke();
  }

  for (const dot of dots) {
    ctx.beginPath();
    ctx.arc(dot.x, dot.y, dot.current ? 8 : 5, 0, Math.PI * 2);
    ctx.fillStyle = dot.current ? "#d9334a" : "#333";
    ctx.fill();
  }
}

export function drawMeters(state: UiState, userEl: HTMLElement, compEl: HTMLElement): void {
  const snap = state.snapshot;
  const fmt = (v: number | null) => (v === null ? "–" : v.toFixed(1));
  userEl.textContent = `player dynamics: ${fmt(snap?.user_avg ?? null)}`;
  compEl.textContent = `machine dynamics: ${fmt(snap?.comp_avg ?? null)}`;
}

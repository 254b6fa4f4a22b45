// Pure geometry for the two visualizations. Computing layout separately
// from drawing keeps it testable without a DOM.

import { RollNote } from "./state.js";
import { Snapshot } from "./protocol.js";

export interface Rect {
  x: number;
  y: number;
  w: number;
  h: number;
  lane: "input" | "output";
  vel: number;
}

export interface RollLayout {
  rects: Rect[];
  /** tick at the left edge of the visible window */
  firstTick: number;
}

const PITCH_MIN = 21; // A0
const PITCH_MAX = 108; // C8

/**
 * Piano roll: x from tick, y from pitch, width from duration. Input and
 * output lanes share the time axis; the lane only selects the color.
 */
export function layoutRoll(
  notes: RollNote[],
  width: number,
  height: number,
  ticksVisible: number,
): RollLayout {
  const lastTick = notes.length ? Math.max(...notes.map((n) => n.tick)) : 0;
  const firstTick = Math.max(0, lastTick - ticksVisible + 1);
  const colWidth = width / ticksVisible;
  const rowHeight = height / (PITCH_MAX - PITCH_MIN + 1);
  const rects: Rect[] = [];
  for (const n of notes) {
    if (n.tick < firstTick) continue;
    const pitch = Math.min(PITCH_MAX, Math.max(PITCH_MIN, n.pitch));
    rects.push({
      x: (n.tick - firstTick) * colWidth,
      y: (PITCH_MAX - pitch) * rowHeight,
      w: Math.max(2, colWidth * Math.min(1, n.dur_ms / 500)),
      h: Math.max(2, rowHeight),
      lane: n.lane,
      vel: n.vel,
    });
  }
  return { rects, firstTick };
}

export interface StateDot {
  id: number;
  x: number;
  y: number;
  current: boolean;
}

export interface Arc {
  from: number;
  to: number;
  /** control-point height; positive arcs above the line (factor links),
   * negative below (suffix links) */
  lift: number;
  thickness: number;
  kind: "factor" | "suffix";
  label?: number;
}

export interface OracleLayout {
  dots: StateDot[];
  arcs: Arc[];
}

/**
 * Oracle view: states on a horizontal line, forward arcs above it for
 * factor links (thickness proportional to weight share at the source
 * state), backward arcs below for suffix links, current state highlighted.
 */
export function layoutOracle(snap: Snapshot, width: number, midY: number): OracleLayout {
  const count = snap.m + 1;
  const gap = width / (count + 1);
  const dots: StateDot[] = [];
  for (let i = 0; i < count; i++) {
    dots.push({ id: i, x: gap * (i + 1), y: midY, current: snap.k === i });
  }

  const totals = new Map<number, number>();
  for (const link of snap.links) {
    totals.set(link.from, (totals.get(link.from) ?? 0) + link.w);
  }

  const arcs: Arc[] = [];
  for (const link of snap.links) {
    const share = link.w / (totals.get(link.from) ?? link.w);
    const span = link.to - link.from;
    arcs.push({
      from: link.from,
      to: link.to,
      lift: 12 + span * 6,
      thickness: 1 + 5 * share,
      kind: "factor",
      label: link.sym,
    });
  }
  for (let i = 1; i < snap.suffix.length; i++) {
    const target = snap.suffix[i];
    if (target < 0) continue; // state 0's suffix link leaves the automaton
    arcs.push({
      from: i,
      to: target,
      lift: -(12 + (i - target) * 6),
      thickness: 1,
      kind: "suffix",
    });
  }
  return { dots, arcs };
}

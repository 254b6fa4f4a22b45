// Wire protocol of the improv session service: one JSON object per
// websocket text frame. This module is the only place that knows the
// message shapes; everything else works with the decoded types.

export const PROTOCOL_VERSION = 1;

export interface Hello {
  type: "hello";
  version: number;
  seed: number;
}

export interface NoteIn {
  type: "note_in";
  pitch: number;
  dur_ms: number;
  vel: number;
}

export interface NoteOut {
  type: "note_out";
  tick: number;
  pitch: number;
  dur_ms: number;
  vel: number;
}

export interface Ack {
  type: "ack";
  tick: number;
}

export interface SetParams {
  type: "set_params";
  alpha?: number;
  beta?: string; // "num/den"
  tau?: number;
}

export interface SnapshotRequest {
  type: "snapshot_request";
}

export interface OracleLink {
  from: number;
  sym: number;
  to: number;
  w: number;
}

export interface Snapshot {
  type: "snapshot";
  m: number;
  k: number | null;
  go: number;
  user_avg: number | null;
  comp_avg: number | null;
  links: OracleLink[];
  suffix: number[];
  lrs: number[];
  params: { alpha: number; beta: string; gamma: number; c: number; tau: number; n: number };
}

export interface ErrorMsg {
  type: "error";
  msg: string;
}

export type ServerMessage = Hello | NoteOut | Ack | Snapshot | ErrorMsg;
export type ClientMessage = Hello | NoteIn | SetParams | SnapshotRequest;

export function encode(msg: ClientMessage): string {
  return JSON.stringify(msg);
}

/** Decode a server frame; returns null for frames we cannot interpret. */
export function decode(raw: string): ServerMessage | null {
  let obj: unknown;
  try {
    obj = JSON.parse(raw);
  } catch {
    return null;
  }
  if (typeof obj !== "object" || obj === null) return null;
  const msg = obj as Record<string, unknown>;
  switch (msg.type) {
    case "hello":
      return typeof msg.version === "number" && typeof msg.seed === "number"
        ? (msg as unknown as Hello)
        : null;
    case "note_out":
      return ["tick", "pitch", "dur_ms", "vel"].every((f) => typeof msg[f] === "number")
        ? (msg as unknown as NoteOut)
        : null;
    case "ack":
      return typeof msg.tick === "number" ? (msg as unknown as Ack) : null;
    case "snapshot":
      return Array.isArray(msg.links) && Array.isArray(msg.suffix)
        ? (msg as unknown as Snapshot)
        : null;
    case "error":
      return typeof msg.msg === "string" ? (msg as unknown as ErrorMsg) : null;
    default:
      return null;
  }
}

export function noteIn(pitch: number, dur_ms: number, vel: number): NoteIn {
  return { type: "note_in", pitch, dur_ms, vel };
}

/** Validate a "num/den" beta string the way the server will. */
export function isValidBeta(beta: string): boolean {
  const m = beta.match(/^(\d+)\/(\d+)$/);
  if (!m) return false;
  const num = Number(m[1]);
  const den = Number(m[2]);
  return den > 0 && num > 0 && num < den;
}

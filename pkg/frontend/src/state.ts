// UI state and its reducer. All engine truth arrives over the wire; the UI
// never computes improvisation logic, it only mirrors what the server says.

import { ServerMessage, Snapshot } from "./protocol.js";

export type ConnectionStatus = "connecting" | "connected" | "disconnected";

export interface RollNote {
  tick: number;
  pitch: number;
  dur_ms: number;
  vel: number;
  lane: "input" | "output";
}

export interface ParamsMirror {
  alpha: number;
  beta: string;
  tau: number;
}

export interface UiState {
  status: ConnectionStatus;
  version: number | null;
  seed: number | null;
  params: ParamsMirror;
  /** last params we sent that the server has not acked yet */
  pendingParams: ParamsMirror | null;
  roll: RollNote[];
  snapshot: Snapshot | null;
  lastError: string | null;
  /** local tick counter for echoing input notes before the server acks */
  localTick: number;
}

export const ROLL_LIMIT = 256;

export function initialState(): UiState {
  return {
    status: "connecting",
    version: null,
    seed: null,
    params: { alpha: 0.5, beta: "4/5", tau: 16 },
    pendingParams: null,
    roll: [],
    snapshot: null,
    lastError: null,
    localTick: 0,
  };
}

function pushNote(roll: RollNote[], note: RollNote): RollNote[] {
  const next = [...roll, note];
  return next.length > ROLL_LIMIT ? next.slice(next.length - ROLL_LIMIT) : next;
}

/** Apply one server message. Pure: returns a new state. */
export function applyServerMessage(state: UiState, msg: ServerMessage): UiState {
  switch (msg.type) {
    case "hello":
      // a hello mid-session means the session restarted: clear the roll
      return {
        ...initialState(),
        status: "connected",
        version: msg.version,
        seed: msg.seed,
        params: state.params,
      };
    case "note_out":
      return {
        ...state,
        localTick: Math.max(state.localTick, msg.tick + 1),
        roll: pushNote(state.roll, {
          tick: msg.tick,
          pitch: msg.pitch,
          dur_ms: msg.dur_ms,
          vel: msg.vel,
          lane: "output",
        }),
      };
    case "ack": {
      const params = state.pendingParams ?? state.params;
      return {
        ...state,
        params,
        pendingParams: null,
        localTick: Math.max(state.localTick, msg.tick + 1),
      };
    }
    case "snapshot":
      return { ...state, snapshot: msg };
    case "error":
      // a rejected set_params must not change the rendered params
      return { ...state, pendingParams: null, lastError: msg.msg };
  }
}

/** Record a note the local player just sent (echo on the input lane). */
export function applyLocalNote(
  state: UiState,
  pitch: number,
  dur_ms: number,
  vel: number,
): UiState {
  return {
    ...state,
    roll: pushNote(state.roll, {
      tick: state.localTick,
      pitch,
      dur_ms,
      vel,
      lane: "input",
    }),
  };
}

/** Record a set_params request; rendered params change only on ack. */
export function applyLocalParams(state: UiState, params: ParamsMirror): UiState {
  return { ...state, pendingParams: params };
}

export function markDisconnected(state: UiState): UiState {
  return { ...state, status: "disconnected" };
}

/** Roll notes ordered by tick within each lane, ready for rendering. */
export function laneNotes(state: UiState, lane: "input" | "output"): RollNote[] {
  return state.roll.filter((n) => n.lane === lane).sort((a, b) => a.tick - b.tick);
}

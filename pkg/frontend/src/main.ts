// Entry point: wire the connection, state, keyboard, knobs, and canvases.
// Messages land in a queue and the DOM updates on animation frames, so
// rendering never blocks message receipt.

import { SessionConnection } from "./connection.js";
import { buildKeyboard } from "./keyboard.js";
import { ServerMessage, isValidBeta, noteIn } from "./protocol.js";
import { drawMeters, drawOracle, drawRoll } from "./render.js";
import {
  UiState,
  applyLocalNote,
  applyLocalParams,
  applyServerMessage,
  initialState,
  laneNotes,
  markDisconnected,
} from "./state.js";

function el<T extends HTMLElement>(id: string): T {
  const found = document.getElementById(id);
  if (!found) throw new Error(`missing element #${id}`);
  return found as T;
}

let state: UiState = initialState();
const inbox: ServerMessage[] = [];

const statusEl = el<HTMLElement>("status");
const errorEl = el<HTMLElement>("error-banner");
const rollCanvas = el<HTMLCanvasElement>("roll");
const oracleCanvas = el<HTMLCanvasElement>("oracle");
const velSlider = el<HTMLInputElement>("vel");
const alphaInput = el<HTMLInputElement>("alpha");
const betaInput = el<HTMLInputElement>("beta");
const tauInput = el<HTMLInputElement>("tau");

const wsUrl =
  new URLSearchParams(location.search).get("ws") ??
  `ws://${location.hostname || "127.0.0.1"}:8765/ws`;

const conn = new SessionConnection(wsUrl, {
  onMessage: (msg) => inbox.push(msg),
  onOpen: () => {
    state = { ...initialState(), status: "connected", params: state.params };
  },
  onClose: () => {
    state = markDisconnected(state);
  },
});
conn.connect();

buildKeyboard(
  el<HTMLElement>("keyboard"),
  () => Number(velSlider.value),
  ({ pitch, dur_ms, vel }) => {
    if (conn.send(noteIn(pitch, dur_ms, vel))) {
      state = applyLocalNote(state, pitch, dur_ms, vel);
    }
  },
);

el<HTMLButtonElement>("apply-params").addEventListener("click", () => {
  const beta = betaInput.value.trim();
  if (!isValidBeta(beta)) {
    errorEl.textContent = `beta must look like 4/5, got "${beta}"`;
    return;
  }
  const params = {
    alpha: Number(alphaInput.value),
    beta,
    tau: Number(tauInput.value),
  };
  if (conn.send({ type: "set_params", ...params })) {
    state = applyLocalParams(state, params);
  }
});

function frame() {
  while (inbox.length) {
    state = applyServerMessage(state, inbox.shift()!);
  }
  statusEl.textContent =
    state.status === "connected"
      ? `connected (v${state.version}, seed ${state.seed})`
      : state.status;
  statusEl.className = state.status;
  errorEl.textContent = state.lastError ?? errorEl.textContent;

  alphaInput.placeholder = String(state.params.alpha);
  betaInput.placeholder = state.params.beta;
  tauInput.placeholder = String(state.params.tau);

  drawRoll(rollCanvas, [...laneNotes(state, "input"), ...laneNotes(state, "output")]);
  if (state.snapshot) drawOracle(oracleCanvas, state.snapshot);
  drawMeters(state, el("user-meter"), el("comp-meter"));
  requestAnimationFrame(frame);
}
requestAnimationFrame(frame);

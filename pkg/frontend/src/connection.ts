// Websocket wrapper: reconnect with backoff, decode frames, poll snapshots.

import { ClientMessage, ServerMessage, decode, encode } from "./protocol.js";

export interface ConnectionCallbacks {
  onMessage(msg: ServerMessage): void;
  onOpen(): void;
  onClose(): void;
}

const SNAPSHOT_POLL_MS = 500; // 2 Hz; snapshots are O(m) and sessions are small
const BACKOFF_START_MS = 500;
const BACKOFF_MAX_MS = 8000;

export class SessionConnection {
  private ws: WebSocket | null = null;
  private backoff = BACKOFF_START_MS;
  private pollTimer: number | null = null;
  private closed = false;

  constructor(
    private url: string,
    private callbacks: ConnectionCallbacks,
    private seed: number | null = null,
  ) {}

  connect(): void {
    if (this.closed) return;
    this.ws = new WebSocket(this.url);
    this.ws.onopen = () => {
      this.backoff = BACKOFF_START_MS;
      if (this.seed !== null) {
        this.send({ type: "hello", version: 1, seed: this.seed });
      }
      this.callbacks.onOpen();
      this.pollTimer = setInterval(
        () => this.send({ type: "snapshot_request" }),
        SNAPSHOT_POLL_MS,
      ) as unknown as number;
    };
    this.ws.onmessage = (ev: MessageEvent) => {
      const msg = decode(String(ev.data));
      if (msg) this.callbacks.onMessage(msg);
    };
    this.ws.onclose = () => {
      if (this.pollTimer !== null) clearInterval(this.pollTimer);
      this.pollTimer = null;
      this.callbacks.onClose();
      if (!this.closed) {
        setTimeout(() => this.connect(), this.backoff);
        this.backoff = Math.min(BACKOFF_MAX_MS, this.backoff * 2);
      }
    };
    this.ws.onerror = () => this.ws?.close();
  }

  send(msg: ClientMessage): boolean {
    if (this.ws && this.ws.readyState === WebSocket.OPEN) {
      this.ws.send(encode(msg));
      return true;
    }
    return false;
  }

  requestSnapshot(): void {
    this.send({ type: "snapshot_request" });
  }

  close(): void {
    this.closed = true;
    this.ws?.close();
  }
}

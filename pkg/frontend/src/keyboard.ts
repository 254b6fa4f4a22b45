// Virtual piano keyboard. Key-hold duration stands in for note duration
// (minimum 50 ms so a quick tap never produces a zero-length note).

export const MIN_DUR_MS = 50;

export interface KeyPress {
  pitch: number;
  dur_ms: number;
  vel: number;
}

export function holdToDuration(downMs: number, upMs: number): number {
  return Math.max(MIN_DUR_MS, Math.round(upMs - downMs));
}

const WHITE_SEMITONES = [0, 2, 4, 5, 7, 9, 11];
const BLACK_SEMITONES = [1, 3, 6, 8, 10];

export function isBlackKey(pitch: number): boolean {
  return BLACK_SEMITONES.includes(pitch % 12);
}

/** Two octaves starting at middle C by default. */
export function keyboardPitches(base = 60, octaves = 2): number[] {
  const out: number[] = [];
  for (let o = 0; o < octaves; o++) {
    for (const s of WHITE_SEMITONES.concat(BLACK_SEMITONES).sort((a, b) => a - b)) {
      out.push(base + 12 * o + s);
    }
  }
  return out;
}

export function buildKeyboard(
  container: HTMLElement,
  velSource: () => number,
  onNote: (press: KeyPress) => void,
): void {
  const downAt = new Map<number, number>();
  for (const pitch of keyboardPitches()) {
    const key = document.createElement("button");
    key.className = isBlackKey(pitch) ? "key black" : "key white";
    key.dataset.pitch = String(pitch);
    key.title = `MIDI ${pitch}`;
    key.addEventListener("pointerdown", () => {
      downAt.set(pitch, performance.now());
      key.classList.add("held");
    });
    const release = () => {
      const started = downAt.get(pitch);
      if (started === undefined) return;
      downAt.delete(pitch);
      key.classList.remove("held");
      onNote({
        pitch,
        dur_ms: holdToDuration(started, performance.now()),
        vel: velSource(),
      });
    };
    key.addEventListener("pointerup", release);
    key.addEventListener("pointerleave", release);
    container.appendChild(key);
  }
}

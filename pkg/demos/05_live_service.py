#!/usr/bin/env python3
"""Talk to the live session service over its websocket protocol.

Start the server first:  improv serve --port 8765 --n 4
Then run this script. Each note_in drives one tick; after n notes the
server starts answering with note_out frames.
"""

import asyncio
import json

import websockets

URL = "ws://127.0.0.1:8765/ws"


async def main():
    async with websockets.connect(URL) as ws:
        hello = json.loads(await ws.recv())
        print(f"connected: protocol v{hello['version']}, session seed {hello['seed']}")

        for i, pitch in enumerate([60, 62, 64, 62, 60, 64, 62, 60]):
            await ws.send(json.dumps(
                {"type": "note_in", "pitch": pitch, "dur_ms": 250, "vel": 90}))
            reply = json.loads(await ws.recv())
            if reply["type"] == "note_out":
                print(f"tick {reply['tick']}: machine plays pitch {reply['pitch']}"
                      f" vel {reply['vel']}")
            else:
                print(f"tick {reply.get('tick', i)}: still learning")

        await ws.send(json.dumps({"type": "snapshot_request"}))
        snap = json.loads(await ws.recv())
        print(f"\noracle now has {snap['m']} states, {len(snap['links'])} links;"
              f" traversal at state {snap['k']}")


if __name__ == "__main__":
    asyncio.run(main())

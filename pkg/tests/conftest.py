from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"
SNIPPETS = FIXTURES / "snippets"


def fixture_text(relpath: str) -> str:
    return (FIXTURES / relpath).read_text()


@pytest.fixture
def snippets_dir() -> Path:
    return SNIPPETS


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


class MockEndpoint:
    """Scripted HTTP endpoint: `respond` maps a request body to a reply body.

    Special reply values: an int is sent as a bare HTTP status; the string
    "stall" sleeps past any client timeout; "garbage" returns non-JSON text.
    """

    def __init__(self, respond):
        self.respond = respond
        self.requests: list[dict] = []
        outer = self

        class Handler(BaseHTTPRequestHandler):
            def do_POST(self):
                length = int(self.headers.get("Content-Length", 0))
                body = json.loads(self.rfile.read(length) or b"{}")
                outer.requests.append(body)
                reply = outer.respond(body)
                if isinstance(reply, int):
                    self.send_response(reply)
                    self.end_headers()
                    return
                if reply == "stall":
                    import time

                    time.sleep(30)
                    self.send_response(200)
                    self.end_headers()
                    return
                if reply == "garbage":
                    payload = b"this is not json"
                else:
                    payload = json.dumps(reply).encode()
                self.send_response(200)
                self.send_header("Content-Type", "application/json")
                self.send_header("Content-Length", str(len(payload)))
                self.end_headers()
                self.wfile.write(payload)

            def log_message(self, *args):
                pass

        self.server = ThreadingHTTPServer(("127.0.0.1", 0), Handler)
        self.thread = threading.Thread(target=self.server.serve_forever, daemon=True)
        self.thread.start()

    @property
    def url(self) -> str:
        host, port = self.server.server_address
        return f"http://{host}:{port}/fill"

    def close(self):
        self.server.shutdown()
        self.server.server_close()


@pytest.fixture
def mock_endpoint():
    endpoints = []

    def make(respond) -> MockEndpoint:
        ep = MockEndpoint(respond)
        endpoints.append(ep)
        return ep

    yield make
    for ep in endpoints:
        ep.close()

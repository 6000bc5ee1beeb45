"""Reports: JSON lines for machines, a short summary for people.

Every line is a JSON object with sorted keys and a ``kind`` field:

* ``item``   -- one enumerated object (a root, a classified pair, ...);
* ``check``  -- one check with ``status`` in pass / fail / inconclusive and
  the bound it was run under;
* ``report`` -- the closing line with the command, the outcome counts and
  the overall status.

No timestamps or timings enter the JSON, so identical inputs give
byte-identical reports.  Timings go to the human summary only.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from nestedroots import __version__

__all__ = ["EXIT_PASS", "EXIT_FAIL", "EXIT_INCONCLUSIVE", "EXIT_USAGE", "Report", "workers", "parallel_map"]

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 64

WORKERS_ENV = "NESTEDROOTS_WORKERS"
STATUSES = ("pass", "fail", "inconclusive")


@dataclass
class Report:
    command: str
    params: dict = field(default_factory=dict)
    lines: list = field(default_factory=list)
    summary: list = field(default_factory=list)
    started: float = field(default_factory=time.perf_counter)

    def item(self, **payload):
        if "kind" in payload:
            raise ValueError("'kind' is reserved for the line type")
        self.lines.append({"kind": "item", **payload})

    def check(self, name: str, status: str, **payload):
        if "kind" in payload:
            raise ValueError("'kind' is reserved for the line type")
        if status not in STATUSES:
            raise ValueError(f"bad status {status!r}")
        self.lines.append({"kind": "check", "check": name, "status": status, **payload})

    def note(self, text: str):
        self.summary.append(text)

    def counts(self) -> dict:
        c = {s: 0 for s in STATUSES}
        for line in self.lines:
            if line["kind"] == "check":
                c[line["status"]] += 1
        return c

    @property
    def status(self) -> str:
        c = self.counts()
        if c["fail"]:
            return "fail"
        if c["inconclusive"]:
            return "inconclusive"
        return "pass"

    @property
    def exit_code(self) -> int:
        return {"pass": EXIT_PASS, "fail": EXIT_FAIL, "inconclusive": EXIT_INCONCLUSIVE}[self.status]

    def closing(self) -> dict:
        return {
            "kind": "report",
            "command": self.command,
            **self.params,
            "outcomes": self.counts(),
            "status": self.status,
            "version": __version__,
        }

    def json_lines(self) -> str:
        out = [json.dumps(line, sort_keys=True, default=str) for line in self.lines]
        out.append(json.dumps(self.closing(), sort_keys=True, default=str))
        return "\n".join(out) + "\n"

    def human(self) -> str:
        elapsed = time.perf_counter() - self.started
        c = self.counts()
        head = f"{self.command}: {self.status.upper()}"
        if any(c.values()):
            head += f" ({c['pass']} pass, {c['fail']} fail, {c['inconclusive']} inconclusive)"
        body = [head] + [f"  {s}" for s in self.summary]
        body.append(f"  elapsed {elapsed:.2f}s")
        return "\n".join(body) + "\n"


def workers() -> int:
    """Worker count from the environment; 1 means run in-process."""
    raw = os.environ.get(WORKERS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn, items, n: int | None = None) -> list:
    """map(fn, items) with results in input order, optionally over processes."""
    items = list(items)
    n = workers() if n is None else n
    if n <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items))

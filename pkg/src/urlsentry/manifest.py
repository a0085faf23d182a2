"""Run manifests: every CLI invocation records what it did.

A manifest holds the fully-resolved configuration, the seed, wall-clock
bounds and the paths it wrote. Re-running a command with a manifest's
config reproduces the outputs bit for bit — timestamps live only here,
never inside model or report files.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field


def utc_now() -> str:
    return dt.datetime.now(dt.timezone.utc).isoformat()


@dataclass
class RunManifest:
    command: str
    config: dict
    seed: int | None = None
    started_at: str = field(default_factory=utc_now)
    finished_at: str | None = None
    outputs: list[str] = field(default_factory=list)

    def finish(self) -> None:
        self.finished_at = utc_now()

    def write(self, path) -> None:
        doc = {
            "command": self.command,
            "config": self.config,
            "seed": self.seed,
            "started_at": self.started_at,
            "finished_at": self.finished_at,
            "outputs": self.outputs,
        }
        with open(path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")

"""Append-only JSONL result log.

One record per CLI result: timestamp, command, seed, chain steps, weight
reports, fingerprints.  Records are self-contained so a logged chain can
be replayed and checked against its logged final matrix.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Iterator, Optional

from .buildup import BuildStep, Chain
from .gf import GF


def chain_record(chain: Chain, *, command: str, seed: Optional[int] = None) -> dict:
    final = chain.final()
    return {
        "command": command,
        "seed": seed,
        "p": chain.base.field.p,
        "base": [row.tolist() for row in chain.base.A.data],
        "steps": [
            {"alpha": s.alpha.value, "gamma": s.gamma.value, "x": list(s.x.entries)}
            for s in chain.steps
        ],
        "final": [row.tolist() for row in final.A.data],
        "reports": [
            {
                "min_weight": r.min_weight,
                "status": r.status,
                "bound": r.bound_value,
            }
            for r in chain.results
        ],
    }


def chain_from_record(record: dict) -> Chain:
    from .code import SymmetricSD
    from .linalg import Matrix

    f = GF(record["p"])
    base = SymmetricSD(Matrix.make(record["base"], f))
    steps = [
        BuildStep.make(s["alpha"], s["gamma"], s["x"], f) for s in record["steps"]
    ]
    return Chain(base, steps)


def append_record(path: str | Path, record: dict) -> None:
    entry = {"timestamp": datetime.now(timezone.utc).isoformat(), **record}
    with Path(path).open("a", encoding="utf-8") as fh:
        fh.write(json.dumps(entry, separators=(",", ":")) + "\n")


def read_records(path: str | Path) -> Iterator[dict]:
    with Path(path).open("r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                yield json.loads(line)

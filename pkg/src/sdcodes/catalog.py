"""Embedded fixture catalog: every published generator matrix this toolkit
reproduces, plus the recorded construction chains.

Entries live as plain code files under ``data/catalog`` with a checksum
index; nothing in an entry is trusted: ``verify_catalog`` re-derives
symmetry, the self-duality criterion A.A^T = -I and (on request) minimum
weights, and the chain replays assert every intermediate matrix
bit-exactly.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .buildup import BuildStep, Chain, extend
from .code import LinearCode, SymmetricSD, is_self_dual, min_weight, to_symmetric
from .codefile import load_codefile
from .gf import GF
from .linalg import Matrix

_DATA = resources.files("sdcodes") / "data"


@dataclass(frozen=True)
class CatalogEntry:
    """One published matrix with its claimed, to-be-reverified properties."""

    id: str
    file: str
    p: int
    n: int
    k: int
    d: Optional[int]
    symmetric: bool
    self_dual: bool
    tier: Optional[int]
    source: str

    def load(self) -> LinearCode:
        path = _DATA / "catalog" / self.file
        cf = load_codefile(str(path))
        if (cf.code.field.p, cf.code.n, cf.code.k) != (self.p, self.n, self.k):
            raise ValueError(f"{self.id}: file parameters disagree with the index")
        return cf.code

    def symmetric_sd(self) -> SymmetricSD:
        sym = to_symmetric(self.load())
        if sym is None:
            raise ValueError(f"{self.id} is not in symmetric standard form")
        return sym


@dataclass(frozen=True)
class ChainRecord:
    """A recorded construction chain: base id, steps, expected outcomes."""

    name: str
    p: int
    base: str
    min_weights: tuple[int, ...]
    alphas: tuple[int, ...]
    gammas: tuple[int, ...]
    xs: tuple[tuple[int, ...], ...]
    results: tuple[str, ...]  # catalog id of each extended code

    def steps(self) -> list[BuildStep]:
        f = GF(self.p)
        return [
            BuildStep.make(a, g, x, f)
            for a, g, x in zip(self.alphas, self.gammas, self.xs)
        ]


@dataclass(frozen=True)
class QRClaim:
    """A quadratic-residue parameter pair with its published outcome."""

    p: int
    ell: int
    n: int
    d: Optional[int]
    self_dual: bool
    tier: Optional[int]
    mds: bool = False


def _index() -> dict:
    return json.loads((_DATA / "catalog.json").read_text())


_cached_index: Optional[dict] = None


def _idx() -> dict:
    global _cached_index
    if _cached_index is None:
        _cached_index = _index()
    return _cached_index


def entries() -> list[CatalogEntry]:
    return [CatalogEntry(**e) for e in _idx()["entries"]]


def get(entry_id: str) -> CatalogEntry:
    for e in entries():
        if e.id == entry_id:
            return e
    raise KeyError(f"no catalog entry {entry_id!r}")


def chains() -> list[ChainRecord]:
    out = []
    for name, c in _idx()["chains"].items():
        out.append(
            ChainRecord(
                name=name,
                p=c["p"],
                base=c["base"],
                min_weights=tuple(c["min_weights"]),
                alphas=tuple(s["alpha"] for s in c["steps"]),
                gammas=tuple(s["gamma"] for s in c["steps"]),
                xs=tuple(tuple(s["x"]) for s in c["steps"]),
                results=tuple(s["result"] for s in c["steps"]),
            )
        )
    return out


def chain(name: str) -> ChainRecord:
    for c in chains():
        if c.name == name:
            return c
    raise KeyError(f"no chain {name!r}")


def qr_claims() -> list[QRClaim]:
    return [QRClaim(**c) for c in _idx()["qr_claims"]]


def verify_checksums() -> list[str]:
    """Compare stored sha256 sums against the data files; returns failures."""
    failures = []
    sums = (_DATA / "CHECKSUMS").read_text().splitlines()
    for line in sums:
        if not line.strip():
            continue
        digest, name = line.split()
        blob = (_DATA / "catalog" / name).read_bytes()
        if hashlib.sha256(blob).hexdigest() != digest:
            failures.append(name)
    return failures


@dataclass
class VerifyLine:
    entry_id: str
    check: str
    ok: bool
    detail: str = ""

    def render(self) -> str:
        mark = "pass" if self.ok else "FAIL"
        suffix = f" ({self.detail})" if self.detail else ""
        return f"[{mark}] {self.entry_id}: {self.check}{suffix}"


def verify_catalog(
    weights: bool = False, weight_budget: int = 50_000_000, seed: int = 0
) -> list[VerifyLine]:
    """Re-derive every claimed property of every entry.

    The default pass checks dimensions, symmetry and the A.A^T = -I
    criterion (expected to fail for the two iso-dual entries).  With
    ``weights=True``, claimed minimum distances of tier-1 entries are
    recomputed exactly under the given budget.
    """
    report: list[VerifyLine] = []
    for name in verify_checksums():
        report.append(VerifyLine(name, "checksum", False, "sha256 mismatch"))
    for e in entries():
        try:
            code = e.load()
        except Exception as exc:  # transcription errors surface here
            report.append(VerifyLine(e.id, "load", False, str(exc)))
            continue
        report.append(
            VerifyLine(e.id, "dimensions", (code.n, code.k) == (e.n, e.k))
        )
        sd = is_self_dual(code)
        report.append(
            VerifyLine(
                e.id,
                "self-dual" if e.self_dual else "not self-dual (as claimed)",
                sd == e.self_dual,
                f"G.G^T {'=' if sd else '!='} 0",
            )
        )
        if e.symmetric:
            sym = to_symmetric(code) if sd else None
            report.append(
                VerifyLine(e.id, "symmetric standard form", sym is not None)
            )
        if weights and e.d is not None and e.tier == 1:
            rep = min_weight(code, weight_budget, seed=seed)
            ok = rep.exact and rep.min_weight == e.d
            report.append(
                VerifyLine(
                    e.id,
                    f"min weight {e.d}",
                    ok,
                    f"got {rep.min_weight} ({rep.status})",
                )
            )
    return report


def replay(record: ChainRecord) -> Chain:
    """Re-run a recorded chain, asserting each printed intermediate."""
    base = get(record.base).symmetric_sd()
    ch = Chain(base)
    current = base
    for step, result_id in zip(record.steps(), record.results):
        current = extend(current, step)
        expected = get(result_id).symmetric_sd()
        if current.A != expected.A:
            raise AssertionError(
                f"chain {record.name}: replayed matrix differs from {result_id}"
            )
        ch.steps.append(step)
    return ch

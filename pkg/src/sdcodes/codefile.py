"""Plain-text generator-matrix files.

Format (bit-exact round trip):
  line 1:        ``p n k``
  lines 2..k+1:  n decimal residues separated by single spaces
  afterwards:    optional ``# key: value`` metadata lines

Decimal text keeps the files diffable and free of any serialisation
library.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path

from .code import LinearCode
from .gf import GF
from .linalg import Matrix


@dataclass
class CodeFile:
    """A parsed generator-matrix file: the code plus its metadata lines."""

    code: LinearCode
    metadata: dict[str, str] = dc_field(default_factory=dict)


class CodeFileError(ValueError):
    """Malformed code file (parse-level failure)."""


def parse_codefile(text: str) -> CodeFile:
    lines = text.splitlines()
    if not lines:
        raise CodeFileError("empty file")
    header = lines[0].split()
    if len(header) != 3:
        raise CodeFileError(f"header must be 'p n k', got {lines[0]!r}")
    try:
        p, n, k = (int(t) for t in header)
    except ValueError as exc:
        raise CodeFileError(f"non-integer header: {lines[0]!r}") from exc
    try:
        field = GF(p)
    except ValueError as exc:
        raise CodeFileError(str(exc)) from exc
    if len(lines) < 1 + k:
        raise CodeFileError(f"expected {k} matrix rows, found {len(lines) - 1}")
    rows = []
    for i in range(1, 1 + k):
        try:
            row = [int(t) for t in lines[i].split()]
        except ValueError as exc:
            raise CodeFileError(f"non-integer entry in row {i}") from exc
        if len(row) != n:
            raise CodeFileError(f"row {i} has {len(row)} entries, expected {n}")
        if any(v < 0 or v >= p for v in row):
            raise CodeFileError(f"row {i} has entries outside [0, {p})")
        rows.append(row)
    metadata: dict[str, str] = {}
    for line in lines[1 + k :]:
        s = line.strip()
        if not s:
            continue
        if not s.startswith("#"):
            raise CodeFileError(f"unexpected trailing line: {line!r}")
        body = s[1:].strip()
        if ":" in body:
            key, _, value = body.partition(":")
            metadata[key.strip()] = value.strip()
    code = LinearCode(Matrix.make(rows, field))
    return CodeFile(code, metadata)


def write_codefile(cf: CodeFile) -> str:
    code = cf.code
    out = [f"{code.field.p} {code.n} {code.k}"]
    for i in range(code.k):
        out.append(" ".join(str(v) for v in code.generator.data[i].tolist()))
    for key, value in cf.metadata.items():
        out.append(f"# {key}: {value}")
    return "\n".join(out) + "\n"


def load_codefile(path: str | Path) -> CodeFile:
    return parse_codefile(Path(path).read_text())


def save_codefile(cf: CodeFile, path: str | Path) -> None:
    Path(path).write_text(write_codefile(cf))

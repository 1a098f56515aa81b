"""Line-oriented text format for Γ-semigroup tables, plus corpus manifests.

A file looks like::

    gamma-semigroup v1
    T 2
    G 1
    zero 0
    names 0 a
    gnames g
    0 0
    0 1

After the header come ``n*m`` rows, one per ``(a, gamma)`` pair in
a-major order, each listing ``[a gamma 0] ... [a gamma n-1]``.  Lines
starting with ``#`` and blank lines are ignored.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .core import GammaSemigroup
from .enumeration import CorpusInstance
from .errors import BadZero, IndexOutOfRange, TableSyntaxError

HEADER = "gamma-semigroup v1"
SUFFIX = ".gsg"
MANIFEST = "manifest.tsv"
MANIFEST_COLUMNS = ("seq", "file", "strategy", "family", "seed", "n", "m", "zero")


def _tokens(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append((lineno, line.split()))
    return out


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok, 10)
    except ValueError:
        raise TableSyntaxError(lineno, f"{what}: expected a base-10 integer, got {tok!r}") from None


def _keyword(lines, pos: int, key: str, last_line: int) -> tuple[int, list[str]]:
    if pos >= len(lines):
        raise TableSyntaxError(last_line + 1, f"missing '{key}' line")
    lineno, toks = lines[pos]
    if toks[0] != key:
        raise TableSyntaxError(lineno, f"expected '{key}', got {toks[0]!r}")
    return lineno, toks


def parse(text: str, *, check_associativity: bool = True) -> GammaSemigroup:
    """Parse one table file.  Errors carry the line they refer to."""
    lines = _tokens(text)
    if not lines:
        raise TableSyntaxError(1, "empty input")
    lineno, toks = lines[0]
    if " ".join(toks) != HEADER:
        raise TableSyntaxError(lineno, f"expected header {HEADER!r}")
    last = lineno

    lineno, toks = _keyword(lines, 1, "T", last)
    if len(toks) != 2:
        raise TableSyntaxError(lineno, "'T' takes one integer")
    n = _int(toks[1], lineno, "T")
    last = lineno
    lineno, toks = _keyword(lines, 2, "G", last)
    if len(toks) != 2:
        raise TableSyntaxError(lineno, "'G' takes one integer")
    m = _int(toks[1], lineno, "G")
    if n < 1 or m < 1:
        raise TableSyntaxError(lineno, f"need T >= 1 and G >= 1, got T={n}, G={m}")

    pos = 3
    zero = None
    names = gnames = None
    zero_line = None
    for key in ("zero", "names", "gnames"):
        if pos < len(lines) and lines[pos][1][0] == key:
            lineno, toks = lines[pos]
            if key == "zero":
                if len(toks) != 2:
                    raise TableSyntaxError(lineno, "'zero' takes one integer")
                zero = _int(toks[1], lineno, "zero")
                zero_line = lineno
            elif key == "names":
                if len(toks) != n + 1:
                    raise TableSyntaxError(lineno, f"'names' needs {n} labels, got {len(toks) - 1}")
                names = tuple(toks[1:])
            else:
                if len(toks) != m + 1:
                    raise TableSyntaxError(lineno, f"'gnames' needs {m} labels, got {len(toks) - 1}")
                gnames = tuple(toks[1:])
            pos += 1

    rows = lines[pos:]
    if len(rows) != n * m:
        where = rows[n * m][0] if len(rows) > n * m else (lines[-1][0] + 1)
        raise TableSyntaxError(where, f"expected {n * m} table rows, got {len(rows)}")
    flat: list[int] = []
    row_lines: list[int] = []
    for lineno, toks in rows:
        if len(toks) != n:
            raise TableSyntaxError(lineno, f"table row needs {n} entries, got {len(toks)}")
        flat.extend(_int(t, lineno, "table entry") for t in toks)
        row_lines.append(lineno)

    try:
        return GammaSemigroup(n, m, flat, zero, names, gnames, check_associativity=check_associativity)
    except IndexOutOfRange as exc:
        if exc.position < 0:
            exc.line = zero_line
        else:
            exc.line = row_lines[exc.position // n]
        exc.args = (f"line {exc.line}: {exc.args[0]}",)
        raise
    except BadZero as exc:
        exc.line = zero_line
        exc.args = (f"line {zero_line}: {exc.args[0]}",)
        raise


def _check_label(label: str, what: str) -> str:
    if not label or any(c.isspace() for c in label) or label.startswith("#"):
        raise ValueError(f"{what} {label!r} cannot be written: labels must be nonempty, "
                         "contain no whitespace and not start with '#'")
    return label


def serialize(S: GammaSemigroup) -> str:
    """Canonical text: header fields in fixed order, single spaces, LF newlines."""
    out = [HEADER, f"T {S.n}", f"G {S.m}"]
    if S.zero is not None:
        out.append(f"zero {S.zero}")
    if S.element_names is not None:
        out.append("names " + " ".join(_check_label(x, "element name") for x in S.element_names))
    if S.gamma_names is not None:
        out.append("gnames " + " ".join(_check_label(x, "gamma name") for x in S.gamma_names))
    t = S.table
    for a in range(S.n):
        for g in range(S.m):
            out.append(" ".join(str(int(x)) for x in t[a, g]))
    return "\n".join(out) + "\n"


def read(path: str | Path, *, check_associativity: bool = True) -> GammaSemigroup:
    return parse(Path(path).read_text(encoding="utf-8"), check_associativity=check_associativity)


def write(S: GammaSemigroup, path: str | Path) -> None:
    Path(path).write_text(serialize(S), encoding="utf-8", newline="\n")


# -- corpus manifests -----------------------------------------------------------


@dataclass(frozen=True)
class ManifestEntry:
    seq: int
    file: str
    strategy: str
    family: str
    seed: int | None
    n: int
    m: int
    zero: int | None


def write_corpus(items: Iterable, directory: str | Path) -> Path:
    """Write every instance as ``NNNNNN.gsg`` plus a ``manifest.tsv`` index."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    manifest = directory / MANIFEST
    with manifest.open("w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(MANIFEST_COLUMNS)
        for item in items:
            S = item.instance
            name = f"{item.seq:06d}{SUFFIX}"
            write(S, directory / name)
            w.writerow([item.seq, name, item.strategy, item.family,
                        "" if item.seed is None else item.seed, S.n, S.m,
                        "" if S.zero is None else S.zero])
    return manifest


def read_manifest(path: str | Path) -> list[ManifestEntry]:
    path = Path(path)
    with path.open(encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh, delimiter="\t"))
    if not rows or tuple(rows[0]) != MANIFEST_COLUMNS:
        raise TableSyntaxError(1, f"{path}: expected manifest header {' '.join(MANIFEST_COLUMNS)}")
    out = []
    for lineno, row in enumerate(rows[1:], start=2):
        if len(row) != len(MANIFEST_COLUMNS):
            raise TableSyntaxError(lineno, f"{path}: manifest row needs {len(MANIFEST_COLUMNS)} columns")
        seq, file, strategy, family, seed, n, m, zero = row
        out.append(ManifestEntry(int(seq), file, strategy, family, int(seed) if seed else None,
                                 int(n), int(m), int(zero) if zero else None))
    return out


def read_corpus(path: str | Path) -> list[CorpusInstance]:
    """Load a manifest (or the directory holding one) back into corpus instances."""
    path = Path(path)
    if path.is_dir():
        path = path / MANIFEST
    out = []
    for e in read_manifest(path):
        S = read(path.parent / e.file)
        out.append(CorpusInstance(e.seq, S, e.strategy, e.family, e.seed))
    return out

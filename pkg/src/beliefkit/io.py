"""Reading and writing bba documents.

A document is plain text::

    # comment
    frame: θ1 θ2 θ3
    name: m1
    m: θ1 = 0.6
    m: θ1|θ2 = 0.4

``name`` is optional.  Subsets use ``|`` for union and ``{}`` for the
empty set.  Masses are written with the shortest repr that round-trips.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

from .errors import ParseError, ValidationError
from .frame import Frame, MassFunction

PathLike = Union[str, Path]


@dataclass(frozen=True)
class BbaDocument:
    bba: MassFunction
    name: Optional[str] = None


def parse_bba(text: str, source: str = "<string>") -> BbaDocument:
    frame = None
    name = None
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'frame:', 'name:' or 'm:', got {line!r}", lineno)
        key, rest = key.strip().lower(), rest.strip()
        if key == "frame":
            if frame is not None:
                raise ParseError("frame declared twice", lineno)
            try:
                frame = Frame(rest.split())
            except ValidationError as exc:
                raise ParseError(str(exc), lineno) from None
        elif key == "name":
            name = rest or None
        elif key == "m":
            if frame is None:
                raise ParseError("mass given before the frame line", lineno)
            expr, eq, value = rest.rpartition("=")
            if not eq:
                raise ParseError(f"expected '<subset> = <mass>', got {rest!r}", lineno)
            try:
                mass = float(value)
            except ValueError:
                raise ParseError(f"invalid mass {value.strip()!r}", lineno) from None
            if not math.isfinite(mass):
                raise ParseError(f"invalid mass {value.strip()!r}", lineno)
            try:
                subset = frame.parse(expr)
            except ValidationError as exc:
                raise ParseError(str(exc), lineno) from None
            entries.append((subset, mass))
        else:
            raise ParseError(f"unknown key {key!r}", lineno)
    if frame is None:
        raise ParseError(f"{source}: no frame line")
    # normalization errors are surfaced as-is, not wrapped
    return BbaDocument(MassFunction(frame, entries), name)


def format_bba(m: MassFunction, name: Optional[str] = None) -> str:
    lines = ["frame: " + " ".join(m.frame.labels)]
    if name:
        lines.append(f"name: {name}")
    for bits, mass in m.items():
        lines.append(f"m: {m.frame.format_bits(bits)} = {mass!r}")
    return "\n".join(lines) + "\n"


def load_document(path: PathLike) -> BbaDocument:
    path = Path(path)
    return parse_bba(path.read_text(encoding="utf-8"), str(path))


def load_bba(path: PathLike) -> MassFunction:
    return load_document(path).bba


def save_bba(m: MassFunction, path: PathLike, name: Optional[str] = None) -> None:
    Path(path).write_text(format_bba(m, name), encoding="utf-8")

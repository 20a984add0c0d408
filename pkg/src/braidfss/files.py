"""Loading ``.sgp``, ``.bdg``, ``.fst`` and ``.hmap`` files.

Diagram and triple files name their presentation either by a catalog
reference (``thompson(2)``, ``houghton(3)``, ``qaut``) or by a path to an
``.sgp`` file, resolved relative to the referring file.
"""

from __future__ import annotations

from pathlib import Path

from .catalog import builtin_from_ref, parse_hmap
from .diagram import parse_diagram, parse_diagram_header
from .fss import parse_triple, parse_triple_header
from .presentation import load_presentation
from .treespace import Space


def resolve_presentation(ref: str, base_dir="."):
    found = builtin_from_ref(ref)
    if found is not None:
        return found[0]
    path = Path(ref)
    if not path.is_absolute():
        path = Path(base_dir) / path
    return load_presentation(path).with_name(ref)


def read_text(path):
    return Path(path).read_text(encoding="utf-8")


def load_diagram(path):
    text = read_text(path)
    ref = parse_diagram_header(text)
    return parse_diagram(text, resolve_presentation(ref, Path(path).parent))


def load_triple(path):
    text = read_text(path)
    ref, base = parse_triple_header(text)
    space = Space(resolve_presentation(ref, Path(path).parent), base)
    return parse_triple(text, space)


def load_hmap(path):
    return parse_hmap(read_text(path))


def file_kind(path) -> str:
    suffix = Path(path).suffix.lower()
    kinds = {".sgp": "presentation", ".bdg": "diagram", ".fst": "triple", ".hmap": "hmap"}
    if suffix not in kinds:
        raise ValueError(f"unknown file type {suffix!r}")
    return kinds[suffix]

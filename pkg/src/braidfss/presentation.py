"""Semigroup presentations, the ``.sgp`` text format, and the tree-like test.

A word is a tuple of generator names. Relations keep their written
orientation: ``(left, right)``.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import ParseError, ValidationError

Word = tuple  # tuple[str, ...], always nonempty

EMPTY_WORD_TOKEN = "eps"
_TOKEN = re.compile(r"[A-Za-z0-9_]+\Z")

# violation codes reported by validate_tree_like
LEFT_NOT_SINGLE = "left-length"
RIGHT_TOO_SHORT = "right-length"
DUPLICATE_LEFT = "duplicate-left"


def check_generator_name(name):
    if not isinstance(name, str) or not _TOKEN.match(name):
        raise ValidationError(f"bad generator name {name!r}")
    if name == EMPTY_WORD_TOKEN:
        raise ValidationError(f"{EMPTY_WORD_TOKEN!r} is reserved")
    return name


@dataclass(frozen=True)
class Presentation:
    """An alphabet plus an ordered sequence of relations ``(left, right)``.

    ``name`` is only a display/reference handle (a builtin name or a file
    path) and takes no part in equality.
    """

    generators: tuple
    relations: tuple
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        gens = tuple(self.generators)
        rels = tuple((tuple(l), tuple(r)) for l, r in self.relations)
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "relations", rels)
        for g in gens:
            check_generator_name(g)
        if len(set(gens)) != len(gens):
            raise ValidationError("duplicate generator names")
        known = set(gens)
        for i, (left, right) in enumerate(rels):
            if not left or not right:
                raise ValidationError(f"relation {i}: empty word")
            for letter in left + right:
                if letter not in known:
                    raise ValidationError(f"relation {i}: undeclared generator {letter!r}")
        object.__setattr__(self, "_relset", frozenset(rels))

    def has_relation(self, left, right):
        return (tuple(left), tuple(right)) in self._relset

    def serialize(self):
        return format_presentation(self)

    def digest(self):
        """Content hash, independent of ``name``."""
        return hashlib.sha256(self.serialize().encode()).hexdigest()[:16]

    def with_name(self, name):
        return Presentation(self.generators, self.relations, name=name)

    def __str__(self):
        rels = ", ".join(f"({' '.join(l)}, {' '.join(r)})" for l, r in self.relations)
        return f"<{' '.join(self.generators)} | {rels}>"


class TreeLikeReport(NamedTuple):
    is_tree_like: bool
    violations: tuple  # of (relation index, reason code)


def validate_tree_like(p: Presentation) -> TreeLikeReport:
    violations = []
    first_right = {}
    for i, (left, right) in enumerate(p.relations):
        if len(left) != 1:
            violations.append((i, LEFT_NOT_SINGLE))
        if len(right) <= 1:
            violations.append((i, RIGHT_TOO_SHORT))
        if len(left) == 1:
            head = left[0]
            if head in first_right and first_right[head] != right:
                violations.append((i, DUPLICATE_LEFT))
            first_right.setdefault(head, right)
    return TreeLikeReport(not violations, tuple(violations))


def expansion_map(p: Presentation):
    """Map each left-side letter to its right-side word. Requires tree-like."""
    report = validate_tree_like(p)
    if not report.is_tree_like:
        raise ValidationError(f"presentation is not tree-like: {report.violations}")
    return {left[0]: right for left, right in p.relations}


def format_presentation(p: Presentation) -> str:
    lines = ["gen: " + " ".join(p.generators)]
    for left, right in p.relations:
        lines.append(f"rel: {' '.join(left)} -> {' '.join(right)}")
    return "\n".join(lines) + "\n"


def _tokens_with_columns(text, offset):
    for m in re.finditer(r"\S+", text):
        yield m.group(), offset + m.start() + 1


def parse_presentation(text: str | Iterable[str], name=None) -> Presentation:
    if not isinstance(text, str):
        text = "".join(text)
    gens = None
    raw_rels = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep or key not in ("gen", "rel"):
            raise ParseError("expected 'gen:' or 'rel:'", lineno, 1)
        offset = len(key) + len(sep) + (len(line) - len(line.lstrip()))
        if key == "gen":
            if gens is not None:
                raise ParseError("second 'gen:' line", lineno, 1)
            gens = []
            for tok, col in _tokens_with_columns(rest, offset):
                if not _TOKEN.match(tok) or tok == EMPTY_WORD_TOKEN:
                    raise ParseError(f"bad generator token {tok!r}", lineno, col)
                if tok in gens:
                    raise ParseError(f"duplicate generator {tok!r}", lineno, col)
                gens.append(tok)
            if not gens:
                raise ParseError("no generators declared", lineno, len(line))
            continue
        if gens is None:
            raise ParseError("'rel:' before 'gen:'", lineno, 1)
        if rest.count("->") != 1:
            raise ParseError("relation needs exactly one '->'", lineno, offset + 1)
        arrow = rest.index("->")
        sides = []
        for part, part_off in ((rest[:arrow], offset), (rest[arrow + 2:], offset + arrow + 2)):
            word = []
            for tok, col in _tokens_with_columns(part, part_off):
                if tok not in gens:
                    raise ParseError(f"undeclared generator {tok!r}", lineno, col)
                word.append(tok)
            sides.append(tuple(word))
        if not sides[0]:
            raise ParseError("empty left side", lineno, offset + 1)
        if not sides[1]:
            raise ParseError("empty right side", lineno, offset + arrow + 3)
        raw_rels.append(tuple(sides))
    if gens is None:
        raise ParseError("missing 'gen:' line")
    return Presentation(tuple(gens), tuple(raw_rels), name=name)


def load_presentation(path) -> Presentation:
    with open(path, encoding="utf-8") as fh:
        return parse_presentation(fh.read(), name=str(path))

"""Braided diagrams stored combinatorially.

A diagram is a set of labelled wires, a set of transistors, and the two
frame sides. Every transistor lists the wires on its top face and on its
bottom face, left to right; the frame lists the wires on its top and bottom
sides. Wire contacts are derived from these sequences, so the face orders
are the only positional data.

Orientation: a wire's top contact is on the frame top or on a transistor's
*bottom* face; its bottom contact is on a transistor's *top* face or on the
frame bottom. Data flows downward from the frame top to the frame bottom.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import ParseError, ValidationError
from .presentation import Presentation

FRAME_TOP = "frame-top"
FRAME_BOTTOM = "frame-bottom"
TOP_FACE = "transistor-top-face"
BOTTOM_FACE = "transistor-bottom-face"


class Attachment(NamedTuple):
    kind: str
    transistor: int | None
    slot: int


class Wire(NamedTuple):
    id: int
    label: str
    top: Attachment
    bottom: Attachment


@dataclass(frozen=True)
class Transistor:
    top: tuple     # wires whose bottom contact is on this top face
    bottom: tuple  # wires whose top contact is on this bottom face

    def __post_init__(self):
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))


class Diagram:
    """An immutable braided diagram over ``presentation``.

    Construction does not validate; call :func:`validate` or :meth:`check`.
    """

    __slots__ = ("presentation", "labels", "transistors", "frame_top", "frame_bottom", "__dict__")

    def __init__(self, presentation: Presentation, labels, transistors, frame_top, frame_bottom):
        self.presentation = presentation
        self.labels = dict(labels)
        self.transistors = {
            t: (v if isinstance(v, Transistor) else Transistor(*v)) for t, v in dict(transistors).items()
        }
        self.frame_top = tuple(frame_top)
        self.frame_bottom = tuple(frame_bottom)

    # contacts -----------------------------------------------------------

    @cached_property
    def top_contacts(self):
        """wire id -> Attachment of its top end (first occurrence wins)."""
        out = {}
        for i, w in enumerate(self.frame_top):
            out.setdefault(w, Attachment(FRAME_TOP, None, i))
        for t, tr in self.transistors.items():
            for i, w in enumerate(tr.bottom):
                out.setdefault(w, Attachment(BOTTOM_FACE, t, i))
        return out

    @cached_property
    def bottom_contacts(self):
        out = {}
        for i, w in enumerate(self.frame_bottom):
            out.setdefault(w, Attachment(FRAME_BOTTOM, None, i))
        for t, tr in self.transistors.items():
            for i, w in enumerate(tr.top):
                out.setdefault(w, Attachment(TOP_FACE, t, i))
        return out

    def wire(self, w) -> Wire:
        return Wire(w, self.labels[w], self.top_contacts[w], self.bottom_contacts[w])

    def wires(self):
        return [self.wire(w) for w in sorted(self.labels)]

    # labels -------------------------------------------------------------

    def word(self, wires):
        return tuple(self.labels[w] for w in wires)

    def top_label_of(self, t):
        return self.word(self.transistors[t].top)

    def bottom_label_of(self, t):
        return self.word(self.transistors[t].bottom)

    # order --------------------------------------------------------------

    def is_positive(self, t):
        """``(top label, bottom label)`` of ``t`` is a relation as written."""
        return self.presentation.has_relation(self.top_label_of(t), self.bottom_label_of(t))

    def above(self, t):
        """Transistors ``s`` with ``t`` directly below them (``t`` ⪯ ``s``)."""
        out = []
        for w in self.transistors[t].top:
            a = self.top_contacts.get(w)
            if a is not None and a.kind == BOTTOM_FACE:
                out.append(a.transistor)
        return out

    def below(self, t):
        out = []
        for w in self.transistors[t].bottom:
            a = self.bottom_contacts.get(w)
            if a is not None and a.kind == TOP_FACE:
                out.append(a.transistor)
        return out

    def topological_order(self):
        """Transistors from top to bottom; ``None`` if the order has a cycle."""
        indeg = {t: 0 for t in self.transistors}
        for t in self.transistors:
            for s in self.below(t):
                indeg[s] += 1
        ready = sorted(t for t, k in indeg.items() if k == 0)
        out = []
        while ready:
            t = ready.pop(0)
            out.append(t)
            for s in self.below(t):
                indeg[s] -= 1
                if indeg[s] == 0:
                    ready.append(s)
        return out if len(out) == len(indeg) else None

    # misc ---------------------------------------------------------------

    def check(self):
        report = validate(self)
        if not report.ok:
            raise ValidationError("; ".join(v.message for v in report.violations))
        return self

    def renumbered(self):
        """Copy with wire ids 0..n-1 and transistor ids 0..m-1 in sorted order."""
        wmap = {w: i for i, w in enumerate(sorted(self.labels))}
        tmap = {t: i for i, t in enumerate(sorted(self.transistors))}
        return self.relabel_ids(wmap, tmap)

    def relabel_ids(self, wmap, tmap):
        return Diagram(
            self.presentation,
            {wmap[w]: lab for w, lab in self.labels.items()},
            {tmap[t]: Transistor([wmap[w] for w in tr.top], [wmap[w] for w in tr.bottom])
             for t, tr in self.transistors.items()},
            [wmap[w] for w in self.frame_top],
            [wmap[w] for w in self.frame_bottom],
        )

    def __repr__(self):
        return (f"Diagram({' '.join(top_label(self))} -> {' '.join(bottom_label(self))}, "
                f"{len(self.labels)} wires, {len(self.transistors)} transistors)")


# validation -------------------------------------------------------------

class Violation(NamedTuple):
    code: str
    ident: object
    message: str


class ValidationReport(NamedTuple):
    ok: bool
    violations: tuple


def validate(d: Diagram) -> ValidationReport:
    v = []
    p = d.presentation
    if not d.labels:
        v.append(Violation("no-wires", None, "diagram has no wires"))
    if not d.frame_top:
        v.append(Violation("empty-frame-top", None, "frame top is empty"))
    alphabet = set(p.generators)
    for w, lab in d.labels.items():
        if lab not in alphabet:
            v.append(Violation("bad-label", w, f"wire {w}: label {lab!r} not in alphabet"))

    top_uses = {}
    bottom_uses = {}
    for w in d.frame_top:
        top_uses[w] = top_uses.get(w, 0) + 1
    for w in d.frame_bottom:
        bottom_uses[w] = bottom_uses.get(w, 0) + 1
    for t, tr in d.transistors.items():
        if not tr.top or not tr.bottom:
            v.append(Violation("empty-face", t, f"transistor {t}: a face has no wires"))
        for face, name in ((tr.top, "top"), (tr.bottom, "bottom")):
            if len(set(face)) != len(face):
                v.append(Violation("repeated-wire", t, f"transistor {t}: wire repeated on {name} face"))
        for w in tr.bottom:
            top_uses[w] = top_uses.get(w, 0) + 1
        for w in tr.top:
            bottom_uses[w] = bottom_uses.get(w, 0) + 1
    for w in set(top_uses) | set(bottom_uses):
        if w not in d.labels:
            v.append(Violation("unknown-wire", w, f"wire {w} is attached but not declared"))
    for w in d.labels:
        if top_uses.get(w, 0) != 1:
            v.append(Violation("top-contact", w, f"wire {w}: {top_uses.get(w, 0)} top contacts"))
        if bottom_uses.get(w, 0) != 1:
            v.append(Violation("bottom-contact", w, f"wire {w}: {bottom_uses.get(w, 0)} bottom contacts"))
    if any(x.code == "unknown-wire" for x in v):
        return ValidationReport(False, tuple(v))

    for t, tr in d.transistors.items():
        top, bottom = d.word(tr.top), d.word(tr.bottom)
        if not (p.has_relation(top, bottom) or p.has_relation(bottom, top)):
            v.append(Violation("relation", t,
                               f"transistor {t}: ({' '.join(top)}, {' '.join(bottom)}) is not a relation"))
    if d.topological_order() is None:
        v.append(Violation("cycle", None, "transistor order has a cycle"))
    return ValidationReport(not v, tuple(v))


# labels and basic constructions ------------------------------------------

def top_label(d: Diagram):
    return d.word(d.frame_top)


def bottom_label(d: Diagram):
    return d.word(d.frame_bottom)


def permutation_diagram(p: Presentation, word, perm) -> Diagram:
    """Transistor-free diagram; wire ``i`` runs from top slot ``i`` to bottom slot ``perm[i]``."""
    word = tuple(word)
    perm = tuple(perm)
    if not word:
        raise ValidationError("a diagram needs at least one wire")
    if sorted(perm) != list(range(len(word))):
        raise ValidationError(f"{perm} is not a permutation of 0..{len(word) - 1}")
    bottom = [None] * len(word)
    for i, j in enumerate(perm):
        bottom[j] = i
    return Diagram(p, dict(enumerate(word)), {}, range(len(word)), bottom)


def identity_diagram(p: Presentation, word) -> Diagram:
    return permutation_diagram(p, word, range(len(tuple(word))))


def concatenate(d1: Diagram, d2: Diagram) -> Diagram:
    """``d1`` stacked on top of ``d2``."""
    if d1.presentation != d2.presentation:
        raise ValidationError("diagrams are over different presentations")
    if bottom_label(d1) != top_label(d2):
        raise ValidationError(
            f"bottom label {' '.join(bottom_label(d1))} != top label {' '.join(top_label(d2))}")
    a = d1.renumbered()
    nw, nt = len(a.labels), len(a.transistors)
    fuse = dict(zip(d2.frame_top, a.frame_bottom))
    wmap = {}
    k = nw
    for w in sorted(d2.labels):
        if w in fuse:
            wmap[w] = fuse[w]
        else:
            wmap[w] = k
            k += 1
    labels = dict(a.labels)
    for w, lab in d2.labels.items():
        if w not in fuse:
            labels[wmap[w]] = lab
    transistors = dict(a.transistors)
    for i, t in enumerate(sorted(d2.transistors)):
        tr = d2.transistors[t]
        transistors[nt + i] = Transistor([wmap[w] for w in tr.top], [wmap[w] for w in tr.bottom])
    return Diagram(a.presentation, labels, transistors, a.frame_top, [wmap[w] for w in d2.frame_bottom])


def concatenate_all(*ds: Diagram) -> Diagram:
    out = ds[0]
    for d in ds[1:]:
        out = concatenate(out, d)
    return out


def invert(d: Diagram) -> Diagram:
    """Vertical mirror image."""
    return Diagram(
        d.presentation, d.labels,
        {t: Transistor(tr.bottom, tr.top) for t, tr in d.transistors.items()},
        d.frame_bottom, d.frame_top,
    )


# .bdg text format ---------------------------------------------------------

def _fmt_list(prefix, ids):
    return "[" + " ".join(f"{prefix}{i}" for i in ids) + "]"


def format_diagram(d: Diagram, presentation_ref=None) -> str:
    ref = presentation_ref or d.presentation.name or d.presentation.digest()
    lines = ["diagram", f"presentation: {ref}", f"wires: {len(d.labels)}"]
    for w in sorted(d.labels):
        lines.append(f"w{w}: {d.labels[w]}")
    for t in sorted(d.transistors):
        tr = d.transistors[t]
        lines.append(f"transistor t{t}: top={_fmt_list('w', tr.top)} bottom={_fmt_list('w', tr.bottom)}")
    lines.append(f"frametop: {_fmt_list('w', d.frame_top)}")
    lines.append(f"framebottom: {_fmt_list('w', d.frame_bottom)}")
    return "\n".join(lines) + "\n"


_WIRE_LINE = re.compile(r"w(\d+)\s*:\s*(\S+)\s*\Z")
_TRANSISTOR_LINE = re.compile(r"transistor\s+t(\d+)\s*:\s*top\s*=\s*\[([^\]]*)\]\s*bottom\s*=\s*\[([^\]]*)\]\s*\Z")
_FRAME_LINE = re.compile(r"(frametop|framebottom)\s*:\s*\[([^\]]*)\]\s*\Z")


def _parse_ids(body, prefix, lineno):
    out = []
    for tok in body.split():
        if not re.fullmatch(prefix + r"\d+", tok):
            raise ParseError(f"bad id {tok!r}, expected {prefix}<n>", lineno)
        out.append(int(tok[len(prefix):]))
    return out


def parse_diagram_header(text):
    """Return the presentation reference named in a ``.bdg`` text."""
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line.startswith("presentation:"):
            return line.partition(":")[2].strip()
    raise ParseError("missing 'presentation:' line")


def parse_diagram(text: str, presentation: Presentation) -> Diagram:
    lines = [(n, raw.split("#", 1)[0].strip()) for n, raw in enumerate(text.splitlines(), start=1)]
    lines = [(n, s) for n, s in lines if s]
    if not lines or lines[0][1] != "diagram":
        raise ParseError("expected 'diagram' header", lines[0][0] if lines else 1, 1)
    labels, transistors = {}, {}
    frame = {}
    declared = None
    for n, line in lines[1:]:
        if line.startswith("presentation:"):
            continue
        if line.startswith("wires:"):
            try:
                declared = int(line.partition(":")[2])
            except ValueError:
                raise ParseError("bad wire count", n) from None
            continue
        m = _WIRE_LINE.match(line)
        if m:
            w = int(m.group(1))
            if w in labels:
                raise ParseError(f"wire w{w} declared twice", n)
            labels[w] = m.group(2)
            continue
        m = _TRANSISTOR_LINE.match(line)
        if m:
            t = int(m.group(1))
            if t in transistors:
                raise ParseError(f"transistor t{t} declared twice", n)
            transistors[t] = Transistor(_parse_ids(m.group(2), "w", n), _parse_ids(m.group(3), "w", n))
            continue
        m = _FRAME_LINE.match(line)
        if m:
            if m.group(1) in frame:
                raise ParseError(f"{m.group(1)} given twice", n)
            frame[m.group(1)] = _parse_ids(m.group(2), "w", n)
            continue
        raise ParseError(f"unrecognized line {line!r}", n, 1)
    if declared is not None and declared != len(labels):
        raise ParseError(f"wires: {declared} but {len(labels)} wire lines")
    for key in ("frametop", "framebottom"):
        if key not in frame:
            raise ParseError(f"missing '{key}:' line")
    return Diagram(presentation, labels, transistors, frame["frametop"], frame["framebottom"])

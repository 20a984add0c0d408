"""Dipoles, reduced forms, canonical forms, and equality in D_b(P, w)."""

from __future__ import annotations

from collections import deque
from typing import NamedTuple

from .diagram import (
    BOTTOM_FACE, FRAME_TOP, TOP_FACE, Diagram, Transistor, concatenate, format_diagram,
    identity_diagram, invert, top_label, validate,
)
from .errors import ValidationError
from .presentation import validate_tree_like

CANONICAL_VERSION = b"\x01"


class DipoleOccurrence(NamedTuple):
    lower: int   # T1: its top face is fed by ``upper``'s bottom face
    upper: int   # T2
    connecting_wires: tuple


def _dipole_at(d: Diagram, lower):
    tr1 = d.transistors[lower]
    contacts = [d.top_contacts.get(w) for w in tr1.top]
    if any(a is None or a.kind != BOTTOM_FACE for a in contacts):
        return None
    upper = contacts[0].transistor
    tr2 = d.transistors[upper]
    if upper == lower or tr2.bottom != tr1.top:
        return None
    if d.word(tr1.bottom) != d.word(tr2.top):
        return None
    return DipoleOccurrence(lower, upper, tr1.top)


def find_dipoles(d: Diagram):
    """All dipoles, sorted by ``(lower, upper)``."""
    out = []
    for t in sorted(d.transistors):
        occ = _dipole_at(d, t)
        if occ is not None:
            out.append(occ)
    return out


def is_reduced(d: Diagram) -> bool:
    return all(_dipole_at(d, t) is None for t in d.transistors)


def reduce_dipole(d: Diagram, occ: DipoleOccurrence) -> Diagram:
    if occ.lower not in d.transistors or occ.upper not in d.transistors or _dipole_at(d, occ.lower) != occ:
        raise ValidationError(f"stale dipole occurrence {occ}")
    t1 = d.transistors[occ.lower]
    t2 = d.transistors[occ.upper]
    # wire j on T2's top takes over the bottom contact of wire k on T1's bottom
    splice = dict(zip(t1.bottom, t2.top))
    dropped = set(occ.connecting_wires) | set(t1.bottom)
    labels = {w: lab for w, lab in d.labels.items() if w not in dropped}
    transistors = {}
    for t, tr in d.transistors.items():
        if t in (occ.lower, occ.upper):
            continue
        if any(w in splice for w in tr.top):
            tr = Transistor([splice.get(w, w) for w in tr.top], tr.bottom)
        transistors[t] = tr
    frame_bottom = [splice.get(w, w) for w in d.frame_bottom]
    return Diagram(d.presentation, labels, transistors, d.frame_top, frame_bottom)


def reduce(d: Diagram, rng=None) -> Diagram:
    """The reduced diagram of ``d``'s class.

    With ``rng`` (a ``random.Random``), dipoles are cancelled in random order
    instead of first-in-order; the result is the same up to equivalence.
    """
    while True:
        occs = find_dipoles(d)
        if not occs:
            return d
        d = reduce_dipole(d, rng.choice(occs) if rng is not None else occs[0])


def canonical_numbering(d: Diagram):
    """Wire and transistor renumbering maps from a breadth-first sweep.

    Starts at the frame top, left to right. A transistor is numbered when a
    wire first reaches its top face; its bottom-face wires are then queued
    left to right.
    """
    wmap, tmap = {}, {}
    queue = deque()
    for w in d.frame_top:
        wmap[w] = len(wmap)
        queue.append(w)
    while queue:
        w = queue.popleft()
        a = d.bottom_contacts[w]
        if a.kind != TOP_FACE or a.transistor in tmap:
            continue
        tmap[a.transistor] = len(tmap)
        for v in d.transistors[a.transistor].bottom:
            if v not in wmap:
                wmap[v] = len(wmap)
                queue.append(v)
    if len(wmap) != len(d.labels) or len(tmap) != len(d.transistors):
        raise ValidationError("diagram is not swept out from its frame top; is it valid?")
    return wmap, tmap


def canonical_form(d: Diagram) -> bytes:
    wmap, tmap = canonical_numbering(d)
    c = d.relabel_ids(wmap, tmap)
    return CANONICAL_VERSION + format_diagram(c, presentation_ref=d.presentation.digest()).encode()


def equivalent(d1: Diagram, d2: Diagram) -> bool:
    """``d1 ≡ d2``: related by a label- and order-preserving isomorphism."""
    return canonical_form(d1) == canonical_form(d2)


def equal(d1: Diagram, d2: Diagram) -> bool:
    """Equality modulo dipoles."""
    if d1.presentation != d2.presentation:
        raise ValidationError("diagrams are over different presentations")
    return canonical_form(reduce(d1)) == canonical_form(reduce(d2))


def is_identity(d: Diagram) -> bool:
    return equal(d, identity_diagram(d.presentation, top_label(d)))


# group structure on (w, w)-diagrams -------------------------------------

def multiply(*ds: Diagram) -> Diagram:
    """Reduced concatenation ``ds[0] ∘ ds[1] ∘ ...`` (first factor on top)."""
    out = ds[0]
    for d in ds[1:]:
        out = reduce(concatenate(out, d))
    return reduce(out)


def power(d: Diagram, k: int) -> Diagram:
    if k < 0:
        d, k = invert(d), -k
    out = identity_diagram(d.presentation, top_label(d))
    for _ in range(k):
        out = multiply(out, d)
    return out


# dipole insertion ---------------------------------------------------------

def insert_dipole(d: Diagram, wire) -> Diagram:
    """Cut ``wire`` and splice in an expanding transistor over its contraction.

    The wire's label must be the left side of a relation.
    """
    lab = d.labels[wire]
    right = next((r for l, r in d.presentation.relations if l == (lab,)), None)
    if right is None:
        raise ValidationError(f"label {lab!r} is not the left side of a relation")
    return _insert_expanding(d, wire, right)


def _fresh(ids, k):
    start = max(ids, default=-1) + 1
    return list(range(start, start + k))


def _insert_expanding(d, wire, right):
    t_up, t_low = _fresh(d.transistors, 2)
    lower_half, *mids = _fresh(d.labels, 1 + len(right))
    labels = dict(d.labels)
    labels[lower_half] = d.labels[wire]
    for m, lab in zip(mids, right):
        labels[m] = lab
    a = d.bottom_contacts[wire]
    transistors = dict(d.transistors)
    frame_bottom = list(d.frame_bottom)
    if a.kind == TOP_FACE:
        tr = transistors[a.transistor]
        face = list(tr.top)
        face[a.slot] = lower_half
        transistors[a.transistor] = Transistor(face, tr.bottom)
    else:
        frame_bottom[a.slot] = lower_half
    transistors[t_up] = Transistor([wire], mids)
    transistors[t_low] = Transistor(mids, [lower_half])
    return Diagram(d.presentation, labels, transistors, d.frame_top, frame_bottom)


def insert_dipole_on(d: Diagram, wires, word) -> Diagram:
    """Insert a contracting-then-expanding pair across ``wires``.

    ``wires`` (any positions) must spell ``word``, the right side of a
    relation ``(y, word)``. Each wire is cut; the upper pieces feed a
    transistor contracting ``word`` to ``y`` and a second transistor expands
    ``y`` back, feeding the lower pieces. Raises if the result is not a valid
    diagram (the cut would create a cycle).
    """
    word = tuple(word)
    if d.word(wires) != word:
        raise ValidationError("wires do not spell the given word")
    left = next((l for l, r in d.presentation.relations if r == word), None)
    if left is None:
        raise ValidationError("word is not the right side of a relation")
    t_up, t_low = _fresh(d.transistors, 2)
    fresh = _fresh(d.labels, len(wires) + len(left))
    lowers, mids = fresh[:len(wires)], fresh[len(wires):]
    labels = dict(d.labels)
    for w, lw in zip(wires, lowers):
        labels[lw] = d.labels[w]
    for m, lab in zip(mids, left):
        labels[m] = lab
    transistors = dict(d.transistors)
    frame_bottom = list(d.frame_bottom)
    for w, lw in zip(wires, lowers):
        a = d.bottom_contacts[w]
        if a.kind == TOP_FACE:
            tr = transistors[a.transistor]
            face = list(tr.top)
            face[a.slot] = lw
            transistors[a.transistor] = Transistor(face, tr.bottom)
        else:
            frame_bottom[a.slot] = lw
    transistors[t_up] = Transistor(list(wires), mids)
    transistors[t_low] = Transistor(mids, lowers)
    out = Diagram(d.presentation, labels, transistors, d.frame_top, frame_bottom)
    if not validate(out).ok:
        raise ValidationError("dipole insertion across these wires creates a cycle")
    return out


# positive / negative splitting ------------------------------------------

def split_positive_negative(d: Diagram):
    """Return positive diagrams ``(A, B)`` with ``d ≡ A ∘ invert(B)``.

    ``d`` must be reduced and over a tree-like presentation. The wires between
    the two parts are ordered by a left-to-right depth-first sweep of the
    positive part starting at the frame top.
    """
    if not validate_tree_like(d.presentation).is_tree_like:
        raise ValidationError("positivity needs a tree-like presentation")
    if not is_reduced(d):
        raise ValidationError("diagram is not reduced")
    positive = {t for t in d.transistors if d.is_positive(t)}

    def upper(w):
        a = d.top_contacts[w]
        return a.kind == FRAME_TOP or a.transistor in positive

    def lower(w):
        a = d.bottom_contacts[w]
        return a.kind != TOP_FACE or a.transistor not in positive

    for w in d.labels:
        if not upper(w) and not lower(w):
            raise ValidationError("a positive transistor lies below a negative one")

    middle = []
    stack = list(reversed(d.frame_top))
    while stack:
        w = stack.pop()
        a = d.bottom_contacts[w]
        if a.kind == TOP_FACE and a.transistor in positive:
            stack.extend(reversed(d.transistors[a.transistor].bottom))
        else:
            middle.append(w)

    up = Diagram(d.presentation, {w: lab for w, lab in d.labels.items() if upper(w)},
                 {t: tr for t, tr in d.transistors.items() if t in positive},
                 d.frame_top, middle)
    down = Diagram(d.presentation, {w: lab for w, lab in d.labels.items() if lower(w)},
                   {t: tr for t, tr in d.transistors.items() if t not in positive},
                   middle, d.frame_bottom)
    return up, invert(down)

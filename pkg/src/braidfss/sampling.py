"""Random partitions, triples, points and diagrams for property checks.

Every sampler takes a ``random.Random``. ``default_rng()`` seeds one from
the ``DIPOLE_SEED`` environment variable (default 0).
"""

from __future__ import annotations

import os
import random
from collections import Counter

from .calculus import insert_dipole, reduce
from .diagram import Diagram, Transistor, identity_diagram
from .fss import DefiningTriple, psi
from .treespace import ROOT, Partition, PointPrefix, Space


def default_rng(offset=0):
    return random.Random(int(os.environ.get("DIPOLE_SEED", "0")) + offset)


def random_partition(space: Space, rng, max_depth=6, expansions=None) -> Partition:
    """Expand random balls of address length below ``max_depth``."""
    if expansions is None:
        expansions = rng.randint(0, 8)
    part = space.trivial_partition()
    for _ in range(expansions):
        open_balls = [a for a in part if len(a) < max_depth and not space.is_leaf(a)]
        if not open_balls:
            break
        part = part.expand(rng.choice(open_balls))
    return part


def _label_counts(space, part):
    return Counter(space.label(a) for a in part)


def random_triple(space: Space, rng, max_depth=6, expansions=None) -> DefiningTriple:
    """Random partitions subdivided until their label multisets agree, then a
    random label-preserving pairing."""
    for _ in range(100):
        p1 = random_partition(space, rng, max_depth, expansions)
        p2 = random_partition(space, rng, max_depth, expansions)
        for _ in range(40):
            c1, c2 = _label_counts(space, p1), _label_counts(space, p2)
            if c1 == c2:
                break
            # grow the smaller partition
            small = p1 if len(p1) < len(p2) or (len(p1) == len(p2) and rng.random() < 0.5) else p2
            candidates = [a for a in small if not space.is_leaf(a) and len(a) < max_depth]
            if not candidates:
                break
            grown = small.expand(rng.choice(candidates))
            if small is p1:
                p1 = grown
            else:
                p2 = grown
        if _label_counts(space, p1) != _label_counts(space, p2):
            continue
        pairs = {}
        for lab in sorted(_label_counts(space, p1)):
            dom = [a for a in p1 if space.label(a) == lab]
            rng_ = [b for b in p2 if space.label(b) == lab]
            rng.shuffle(rng_)
            pairs.update(zip(dom, rng_))
        return DefiningTriple(space, pairs)
    return DefiningTriple.identity(space)


def random_point(space: Space, rng, depth=8) -> PointPrefix:
    """Random downward walk: stops at a leaf or after ``depth`` edges."""
    addr = ROOT
    while len(addr) < depth:
        kids = space.children(addr)
        if not kids:
            break
        addr = rng.choice(kids)[0]
    return PointPrefix(addr, space.is_leaf(addr))


def all_points(space: Space, depth=8):
    """Every vertex with address length at most ``depth``, as point prefixes."""
    out = []
    stack = [ROOT]
    while stack:
        a = stack.pop()
        out.append(PointPrefix(a, space.is_leaf(a)))
        if len(a) < depth:
            stack.extend(c for c, _ in space.children(a))
    return out


def random_diagram(p, rng, top_word, max_transistors=12) -> Diagram:
    """A random valid diagram built by stacking elementary layers.

    Each step expands a frame-bottom wire by a positive transistor, contracts
    randomly chosen frame-bottom wires spelling a right side with a negative
    transistor, or inserts a dipole on a random wire. The frame bottom is
    shuffled at the end.
    """
    d = identity_diagram(p, top_word)
    lefts = {l[0]: r for l, r in p.relations if len(l) == 1}
    steps = rng.randint(1, 3 * max_transistors)
    for _ in range(steps):
        room = max_transistors - len(d.transistors)
        if room <= 0:
            break
        op = rng.random()
        if op < 0.4:
            d = _expand_bottom(d, rng, lefts)
        elif op < 0.8:
            d = _contract_bottom(d, rng)
        elif room >= 2:
            cands = [w for w in d.labels if d.labels[w] in lefts]
            if cands:
                d = insert_dipole(d, rng.choice(sorted(cands)))
    bottom = list(d.frame_bottom)
    rng.shuffle(bottom)
    return Diagram(d.presentation, d.labels, d.transistors, d.frame_top, bottom)


def _expand_bottom(d, rng, lefts):
    slots = [i for i, w in enumerate(d.frame_bottom) if d.labels[w] in lefts]
    if not slots:
        return d
    i = rng.choice(slots)
    w = d.frame_bottom[i]
    right = lefts[d.labels[w]]
    start = max(d.labels) + 1
    new = list(range(start, start + len(right)))
    labels = dict(d.labels)
    labels.update(zip(new, right))
    transistors = dict(d.transistors)
    transistors[max(transistors, default=-1) + 1] = Transistor([w], new)
    bottom = list(d.frame_bottom[:i]) + new + list(d.frame_bottom[i + 1:])
    return Diagram(d.presentation, labels, transistors, d.frame_top, bottom)


def _contract_bottom(d, rng):
    rels = list(d.presentation.relations)
    rng.shuffle(rels)
    for left, right in rels:
        free = list(d.frame_bottom)
        chosen = []
        for letter in right:
            cands = [w for w in free if d.labels[w] == letter]
            if not cands:
                break
            w = rng.choice(cands)
            chosen.append(w)
            free.remove(w)
        else:
            start = max(d.labels) + 1
            new = list(range(start, start + len(left)))
            labels = dict(d.labels)
            labels.update(zip(new, left))
            transistors = dict(d.transistors)
            transistors[max(transistors, default=-1) + 1] = Transistor(chosen, new)
            pos = min(d.frame_bottom.index(w) for w in chosen)
            rest = [w for w in d.frame_bottom if w not in chosen]
            bottom = rest[:pos] + new + rest[pos:]
            return Diagram(d.presentation, labels, transistors, d.frame_top, bottom)
    return d


def random_element(space: Space, rng, max_depth=5, expansions=None):
    """A random ``([X], [X])``-diagram: the reduced image of a random triple."""
    return reduce(psi(random_triple(space, rng, max_depth, expansions)))

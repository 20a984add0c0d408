"""Elements of the FSS group of ``Ends(T_(P, x))`` and the map ψ to diagrams.

The similarity structure is the small one coming from the tree: between two
balls with the same vertex label there is exactly one similarity, which
keeps the child-index suffix of every end; between differently labelled
balls there is none. An element is therefore a *defining triple*: two ball
partitions and a label-preserving bijection between them.

Composition convention: ``compose(t1, t2)`` applies ``t2`` first.
"""

from __future__ import annotations

from typing import NamedTuple

from .calculus import reduce, split_positive_negative
from .diagram import (
    TOP_FACE, Diagram, Transistor, bottom_label, concatenate_all, identity_diagram, invert,
    permutation_diagram, top_label, validate,
)
from .errors import ParseError, ValidationError
from .treespace import (
    ROOT, Partition, PointPrefix, Space, check_point, common_refinement, format_address,
    parse_address, partition_problem,
)


class DefiningTriple:
    """Domain partition, range partition, and the pairing between them.

    ``pairs`` maps each domain address to its range address.
    """

    def __init__(self, space: Space, pairs):
        self.space = space
        self.pairs = dict(sorted((tuple(a), tuple(b)) for a, b in dict(pairs).items()))

    @classmethod
    def identity(cls, space: Space):
        return cls(space, {ROOT: ROOT})

    @property
    def domain(self) -> Partition:
        return Partition(self.space, self.pairs.keys())

    @property
    def range(self) -> Partition:
        return Partition(self.space, self.pairs.values())

    def __eq__(self, other):
        return isinstance(other, DefiningTriple) and self.space == other.space and self.pairs == other.pairs

    def __hash__(self):
        return hash(tuple(self.pairs.items()))

    def __repr__(self):
        body = ", ".join(f"{format_address(a)}->{format_address(b)}" for a, b in self.pairs.items())
        return f"DefiningTriple({body})"

    def is_identity(self):
        return self.pairs == {ROOT: ROOT}

    def check(self):
        report = validate_triple(self)
        if not report.ok:
            raise ValidationError("; ".join(report.problems))
        return self

    def __call__(self, point):
        return evaluate(self, point)

    def __mul__(self, other):
        return compose(self, other)


# canonical (coarsest) triples are the group elements
FSSElement = DefiningTriple


class TripleReport(NamedTuple):
    ok: bool
    problems: tuple


def validate_triple(t: DefiningTriple) -> TripleReport:
    problems = []
    for name, addrs in (("domain", list(t.pairs.keys())), ("range", list(t.pairs.values()))):
        why = partition_problem(t.space, addrs)
        if why:
            problems.append(f"{name}: {why}")
    if len(set(t.pairs.values())) != len(t.pairs):
        problems.append("pairing is not injective")
    if not problems:
        for a, b in t.pairs.items():
            la, lb = t.space.label(a), t.space.label(b)
            if la != lb:
                problems.append(f"label mismatch: {format_address(a)} ({la}) -> {format_address(b)} ({lb})")
    return TripleReport(not problems, tuple(problems))


class SimilarityMap(NamedTuple):
    """The unique similarity between two equally labelled balls."""

    source: tuple
    target: tuple

    @property
    def log_scale(self):
        """``ln C`` where distances scale by ``C``: depth(source) - depth(target)."""
        return len(self.source) - len(self.target)

    def __call__(self, point: PointPrefix) -> PointPrefix:
        n = len(self.source)
        if point.address[:n] != self.source:
            raise ValidationError(f"{point} is not in ball {format_address(self.source)}")
        return PointPrefix(self.target + point.address[n:], point.terminal)


def similarity(space: Space, source, target) -> SimilarityMap:
    if space.label(source) != space.label(target):
        raise ValidationError("no similarity between balls with different labels")
    return SimilarityMap(tuple(source), tuple(target))


def evaluate(t: DefiningTriple, p: PointPrefix) -> PointPrefix:
    if not isinstance(p, PointPrefix):
        p = PointPrefix(tuple(p))
    check_point(t.space, p)
    addr = p.address
    for k in range(len(addr) + 1):
        img = t.pairs.get(addr[:k])
        if img is not None:
            return PointPrefix(img + addr[k:], p.terminal)
    raise ValidationError(f"point prefix {p} is too shallow for the domain partition")


# diagrams -----------------------------------------------------------------

def partition_diagram(part: Partition) -> Diagram:
    """The positive diagram cutting the root ball down to ``part``."""
    space = part.space
    labels, transistors, bottom = {}, {}, []

    def build(addr):
        w = len(labels)
        labels[w] = space.label(addr)
        if addr in part:
            bottom.append(w)
        else:
            t = len(transistors)
            transistors[t] = None
            kids = [build(a) for a, _ in space.children(addr)]
            transistors[t] = Transistor([w], kids)
        return w

    root = build(ROOT)
    return Diagram(space.presentation, labels, transistors, [root], bottom)


def bijection_diagram(t: DefiningTriple) -> Diagram:
    """Transistor-free diagram: top in domain order, bottom in image order."""
    dom = list(t.pairs)
    rank = {b: i for i, b in enumerate(sorted(t.pairs.values()))}
    word = [t.space.label(a) for a in dom]
    return permutation_diagram(t.space.presentation, word, [rank[t.pairs[a]] for a in dom])


def invert_triple(t: DefiningTriple) -> DefiningTriple:
    return DefiningTriple(t.space, {b: a for a, b in t.pairs.items()})


def psi(t: DefiningTriple) -> Diagram:
    """``Δ_range ∘ Δ_(pairing inverse) ∘ Δ_domain⁻¹`` (unreduced)."""
    return concatenate_all(
        partition_diagram(t.range),
        bijection_diagram(invert_triple(t)),
        invert(partition_diagram(t.domain)),
    )


def subdivide(t: DefiningTriple, addr) -> DefiningTriple:
    """Split domain ball ``addr`` and its image into children, i-th to i-th."""
    addr = tuple(addr)
    if addr not in t.pairs:
        raise ValidationError(f"{format_address(addr)} is not a domain ball")
    img = t.pairs[addr]
    kids = t.space.children(addr)
    if not kids:
        raise ValidationError(f"ball {format_address(addr)} is a single point")
    pairs = dict(t.pairs)
    del pairs[addr]
    for i in range(len(kids)):
        pairs[addr + (i,)] = img + (i,)
    return DefiningTriple(t.space, pairs)


def _refine_domain(t: DefiningTriple, target: Partition) -> DefiningTriple:
    while True:
        coarse = next((a for a in t.pairs if a not in target), None)
        if coarse is None:
            return t
        t = subdivide(t, coarse)


def _refine_range(t: DefiningTriple, target: Partition) -> DefiningTriple:
    while True:
        coarse = next((a for a, b in t.pairs.items() if b not in target), None)
        if coarse is None:
            return t
        t = subdivide(t, coarse)


def compose_raw(t1: DefiningTriple, t2: DefiningTriple) -> DefiningTriple:
    """A (not necessarily coarsest) triple for ``t1 ∘ t2`` (``t2`` first)."""
    if t1.space != t2.space:
        raise ValidationError("triples over different spaces")
    middle = common_refinement(t2.range, t1.domain)
    t2 = _refine_range(t2, middle)
    t1 = _refine_domain(t1, middle)
    return DefiningTriple(t1.space, {a: t1.pairs[b] for a, b in t2.pairs.items()})


def compose(t1: DefiningTriple, t2: DefiningTriple) -> DefiningTriple:
    return canonicalize(compose_raw(t1, t2))


def canonicalize(t: DefiningTriple) -> DefiningTriple:
    """The coarsest defining triple of the same element."""
    return triple_from_diagram(reduce(psi(t)))


def _trace_positive(space: Space, d: Diagram):
    """Ball addresses of the frame-bottom wires of a positive ``([X], w)``-diagram."""
    addr = {d.frame_top[0]: ROOT}
    stack = [d.frame_top[0]]
    while stack:
        w = stack.pop()
        a = addr[w]
        if d.labels[w] != space.label(a):
            raise ValidationError(f"wire label {d.labels[w]} does not match ball {format_address(a)}")
        c = d.bottom_contacts[w]
        if c.kind != TOP_FACE:
            continue
        tr = d.transistors[c.transistor]
        if d.word(tr.bottom) != space.child_labels(a):
            raise ValidationError("transistor does not expand a ball into its subballs")
        for i, v in enumerate(tr.bottom):
            addr[v] = a + (i,)
            stack.append(v)
    return [addr[w] for w in d.frame_bottom]


def _rehome(d: Diagram, space: Space) -> Diagram:
    if d.presentation == space.presentation:
        return d
    moved = Diagram(space.presentation, d.labels, d.transistors, d.frame_top, d.frame_bottom)
    if not validate(moved).ok:
        raise ValidationError("diagram uses letters outside the space's presentation")
    return moved


def triple_from_diagram(d: Diagram, space: Space | None = None) -> DefiningTriple:
    """Pull a ``([X], [X])``-diagram back to a defining triple (coarsest)."""
    top, bottom = top_label(d), bottom_label(d)
    if len(top) != 1 or top != bottom:
        raise ValidationError(f"need an (x, x)-diagram, got ({' '.join(top)}, {' '.join(bottom)})")
    if space is None:
        space = Space(d.presentation, top[0])
    elif space.base != top[0]:
        raise ValidationError("top label is not the space's base generator")
    d = reduce(_rehome(d, space))
    upper, lower = split_positive_negative(d)
    ranges = _trace_positive(space, upper)
    domains = _trace_positive(space, lower)
    return DefiningTriple(space, dict(zip(domains, ranges))).check()


# .fst text format -----------------------------------------------------------

def format_triple(t: DefiningTriple, presentation_ref=None) -> str:
    ref = presentation_ref or t.space.source.name or t.space.source.digest()
    lines = [f"presentation: {ref}", f"base: {t.space.base}"]
    for a, b in t.pairs.items():
        lines.append(f"map: {format_address(a)} -> {format_address(b)}")
    return "\n".join(lines) + "\n"


def parse_triple_header(text):
    ref = base = None
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line.startswith("presentation:"):
            ref = line.partition(":")[2].strip()
        elif line.startswith("base:"):
            base = line.partition(":")[2].strip()
    if ref is None or base is None:
        raise ParseError("need 'presentation:' and 'base:' lines")
    return ref, base


def parse_triple(text: str, space: Space) -> DefiningTriple:
    pairs = {}
    for n, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line or line.startswith(("presentation:", "base:")):
            continue
        if not line.startswith("map:"):
            raise ParseError(f"unrecognized line {line!r}", n, 1)
        body = line.partition(":")[2]
        if body.count("->") != 1:
            raise ParseError("map line needs one '->'", n)
        left, right = body.split("->")
        try:
            a, b = parse_address(left), parse_address(right)
        except ParseError as e:
            raise ParseError(str(e), n) from None
        if a in pairs:
            raise ParseError(f"domain ball {format_address(a)} mapped twice", n)
        pairs[a] = b
    if not pairs:
        raise ParseError("no 'map:' lines")
    return DefiningTriple(space, pairs)


def identity_element(space: Space) -> Diagram:
    return identity_diagram(space.presentation, (space.base,))

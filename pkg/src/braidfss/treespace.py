"""The ultrametric space of ends of the labelled tree of a tree-like presentation.

Vertices are addressed by tuples of 0-based child indices, ``()`` being the
root. The root carries the base generator; a vertex labelled ``y`` has one
child per letter of the right side of the unique relation ``(y, ...)``, and
no children if ``y`` heads no relation. The ball ``B_v`` is the set of ends
through ``v``; two ends sharing ``m`` edges are at distance ``e**-m``.

Trees are never materialized; children are computed from the presentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, total_ordering
from typing import NamedTuple

from .errors import ParseError, ValidationError
from .presentation import Presentation, expansion_map

ROOT = ()


def parse_address(text: str) -> tuple:
    text = text.strip()
    if text == "eps":
        return ROOT
    try:
        path = tuple(int(part) for part in text.split("."))
    except ValueError:
        raise ParseError(f"bad address {text!r}") from None
    if any(i < 0 for i in path):
        raise ParseError(f"bad address {text!r}")
    return path


def format_address(addr) -> str:
    return ".".join(map(str, addr)) if addr else "eps"


def is_prefix(a, b) -> bool:
    return len(a) <= len(b) and b[:len(a)] == a


def presentation_of_space(p: Presentation, base) -> Presentation:
    """``p`` restricted to the generators reachable from ``base``."""
    expand = expansion_map(p)
    if base not in p.generators:
        raise ValidationError(f"unknown base generator {base!r}")
    seen = {base}
    todo = [base]
    while todo:
        y = todo.pop()
        for z in expand.get(y, ()):
            if z not in seen:
                seen.add(z)
                todo.append(z)
    gens = tuple(g for g in p.generators if g in seen)
    rels = tuple((l, r) for l, r in p.relations if l[0] in seen)
    name = p.name if len(gens) == len(p.generators) else None
    return Presentation(gens, rels, name=name)


class Space:
    """``Ends(T_(p, base))`` for a tree-like presentation ``p``."""

    def __init__(self, presentation: Presentation, base):
        self.source = presentation
        self.base = base
        self.presentation = presentation_of_space(presentation, base)
        if self.presentation == presentation:
            self.presentation = presentation
        self._expand = expansion_map(self.presentation)

    def __eq__(self, other):
        return isinstance(other, Space) and (self.presentation, self.base) == (other.presentation, other.base)

    def __hash__(self):
        return hash((self.presentation, self.base))

    def __repr__(self):
        return f"Space({self.presentation}, base={self.base!r})"

    def label(self, addr):
        y = self.base
        for i in addr:
            kids = self._expand.get(y, ())
            if not 0 <= i < len(kids):
                raise ValidationError(f"address {format_address(addr)} is not a vertex")
            y = kids[i]
        return y

    def is_vertex(self, addr):
        try:
            self.label(addr)
        except ValidationError:
            return False
        return True

    def child_labels(self, addr):
        return self._expand.get(self.label(addr), ())

    def is_leaf(self, addr):
        return not self.child_labels(addr)

    def children(self, addr):
        return [(tuple(addr) + (i,), y) for i, y in enumerate(self.child_labels(addr))]

    def ball(self, addr) -> Ball:
        addr = tuple(addr)
        return Ball(addr, self.label(addr), len(addr) + 1, space=self)

    def root(self) -> Ball:
        return self.ball(ROOT)

    def partition(self, addresses) -> Partition:
        return Partition(self, addresses)

    def trivial_partition(self) -> Partition:
        return Partition(self, [ROOT])


def children(space: Space, addr):
    return space.children(addr)


@total_ordering
@dataclass(frozen=True)
class Ball:
    vertex: tuple
    label: str
    depth: int
    space: Space = field(compare=False, repr=False, default=None)

    @property
    def is_singleton(self):
        return self.space.is_leaf(self.vertex)

    def contains(self, other: Ball) -> bool:
        return is_prefix(self.vertex, other.vertex)

    def __lt__(self, other):
        return compare_balls(self, other) < 0

    def __str__(self):
        return format_address(self.vertex)


def maximal_proper_subballs(b: Ball):
    if b.is_singleton:
        raise ValidationError(f"ball {b} is a single point")
    return [b.space.ball(a) for a, _ in b.space.children(b.vertex)]


def compare_balls(b1: Ball, b2: Ball) -> int:
    """-1 or 1 by the child index where the addresses first differ."""
    a1, a2 = b1.vertex, b2.vertex
    if is_prefix(a1, a2) or is_prefix(a2, a1):
        raise ValidationError(f"balls {b1} and {b2} are not disjoint")
    return -1 if a1 < a2 else 1


# partitions ---------------------------------------------------------------

def _antichain_problem(addresses):
    addrs = sorted(addresses)
    for a, b in zip(addrs, addrs[1:]):
        # in lexicographic order a prefix sits immediately before some extension
        if is_prefix(a, b):
            return f"{format_address(a)} contains {format_address(b)}"
    return None


def _coverage_problem(space, addresses):
    members = set(addresses)
    prefixes = set()
    for a in members:
        for k in range(len(a)):
            prefixes.add(a[:k])
    stack = [ROOT]
    while stack:
        v = stack.pop()
        if v in members:
            continue
        if v not in prefixes:
            return f"ends through {format_address(v)} are not covered"
        kids = space.children(v)
        if not kids:
            return f"leaf {format_address(v)} is not covered"
        stack.extend(a for a, _ in kids)
    return None


def partition_problem(space: Space, addresses):
    """Describe why ``addresses`` is not a partition into balls, or ``None``."""
    addrs = [tuple(a) for a in addresses]
    if not addrs:
        return "empty"
    if len(set(addrs)) != len(addrs):
        return "repeated ball"
    for a in addrs:
        if not space.is_vertex(a):
            return f"{format_address(a)} is not a vertex"
    return _antichain_problem(addrs) or _coverage_problem(space, addrs)


def is_partition(space: Space, addresses) -> bool:
    return partition_problem(space, addresses) is None


class Partition:
    """A finite partition of the space into balls, kept in ball order."""

    def __init__(self, space: Space, addresses):
        self.space = space
        self.addresses = tuple(sorted(tuple(a) for a in addresses))
        problem = partition_problem(space, self.addresses)
        if problem:
            raise ValidationError(f"not a partition: {problem}")

    @cached_property
    def balls(self):
        return tuple(self.space.ball(a) for a in self.addresses)

    @cached_property
    def _set(self):
        return frozenset(self.addresses)

    def __contains__(self, addr):
        return tuple(addr) in self._set

    def __len__(self):
        return len(self.addresses)

    def __iter__(self):
        return iter(self.addresses)

    def __eq__(self, other):
        return isinstance(other, Partition) and self.space == other.space and self.addresses == other.addresses

    def __hash__(self):
        return hash(self.addresses)

    def __repr__(self):
        return "Partition{" + ", ".join(map(format_address, self.addresses)) + "}"

    def labels(self):
        return tuple(self.space.label(a) for a in self.addresses)

    def containing(self, addr):
        """The member ball whose address is a prefix of ``addr``, or ``None``."""
        addr = tuple(addr)
        for k in range(len(addr) + 1):
            if addr[:k] in self._set:
                return addr[:k]
        return None

    def expand(self, addr) -> Partition:
        """Replace the ball at ``addr`` by its maximal proper subballs."""
        addr = tuple(addr)
        if addr not in self._set:
            raise ValidationError(f"{format_address(addr)} is not in the partition")
        kids = self.space.children(addr)
        if not kids:
            raise ValidationError(f"ball {format_address(addr)} is a single point")
        rest = [a for a in self.addresses if a != addr]
        return Partition(self.space, rest + [a for a, _ in kids])

    def refines(self, other: Partition) -> bool:
        return all(other.containing(a) is not None for a in self.addresses)


def common_refinement(p1: Partition, p2: Partition) -> Partition:
    """Coarsest partition refining both: keep the deeper of each comparable pair."""
    if p1.space != p2.space:
        raise ValidationError("partitions of different spaces")
    union = set(p1.addresses) | set(p2.addresses)
    keep = [a for a in union if not any(b != a and is_prefix(a, b) for b in union)]
    return Partition(p1.space, keep)


def standard_decomposition(part: Partition):
    """Addresses to expand, in order, to turn the trivial partition into ``part``.

    Repeatedly merges a deepest ball together with its siblings back into
    their parent; the reversed merge list is the expansion sequence.
    """
    space = part.space
    current = set(part.addresses)
    merges = []
    while current != {ROOT}:
        deepest = max(current, key=lambda a: (len(a), [-i for i in a]))
        parent = deepest[:-1]
        family = [a for a, _ in space.children(parent)]
        missing = [a for a in family if a not in current]
        if missing:
            raise ValidationError(f"sibling {format_address(missing[0])} missing; not a partition")
        current.difference_update(family)
        current.add(parent)
        merges.append(parent)
    return merges[::-1]


def replay_expansions(space: Space, moves) -> Partition:
    part = space.trivial_partition()
    for addr in moves:
        part = part.expand(addr)
    return part


# points and the metric ----------------------------------------------------

class PointPrefix(NamedTuple):
    address: tuple
    terminal: bool = False

    def __str__(self):
        return format_address(self.address) + ("!" if self.terminal else "")


def check_point(space: Space, p: PointPrefix):
    if not space.is_vertex(p.address):
        raise ValidationError(f"{format_address(p.address)} is not a vertex")
    if p.terminal != space.is_leaf(p.address):
        kind = "terminal" if p.terminal else "non-terminal"
        raise ValidationError(f"{format_address(p.address)} marked {kind} but leafness disagrees")
    return p


class Distance(NamedTuple):
    shared_edges: float  # an int, or math.inf for identical ends
    value: float


def shared_edges(p1: PointPrefix, p2: PointPrefix):
    a, b = p1.address, p2.address
    for m, (i, j) in enumerate(zip(a, b)):
        if i != j:
            return m
    if a == b and p1.terminal and p2.terminal:
        return math.inf
    raise ValidationError(f"{p1} and {p2} do not diverge; insufficient depth")


def distance(p1: PointPrefix, p2: PointPrefix) -> Distance:
    m = shared_edges(p1, p2)
    return Distance(m, 0.0 if m == math.inf else math.exp(-m))

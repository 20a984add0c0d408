"""Built-in presentations and their interpreters.

* ``thompson(d)``: ``<x | (x, x^d)>``, base ``x``; the braided diagram group is V_d.
* ``houghton(n)``: ``<a, r, x1..xn | (r, x1...xn), (xi, a xi)>``, base ``r``
  (``<a, r | (r, a r)>`` for ``n = 1``); the group is Houghton's H_n.
* ``qaut``: ``<a, x | (x, x a x)>``, base ``x``.

Houghton conventions: rays are numbered ``1..n`` and vertices on a ray
``0, 1, 2, ...``. In the tree of ``houghton(n)`` the ball of ray ``i`` with its
first ``k`` vertices removed sits at ``(i-1, 1, ..., 1)`` (``k`` ones), and the
vertex ``(i, k)`` is the leaf one step further along child ``0``. For ``n = 1``
the ray prefix ``i-1`` is absent.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .calculus import reduce
from .diagram import Diagram
from .errors import ParseError, ValidationError
from .fss import DefiningTriple, psi, triple_from_diagram
from .presentation import Presentation
from .treespace import ROOT, Space

BUILTIN_NAMES = ("thompson", "houghton", "qaut")


def thompson(d=2) -> Presentation:
    if int(d) != d or d < 2:
        raise ValidationError("thompson needs d >= 2")
    return Presentation(("x",), [(("x",), ("x",) * d)], name=f"thompson({d})")


def houghton(n=2) -> Presentation:
    if int(n) != n or n < 1:
        raise ValidationError("houghton needs n >= 1")
    if n == 1:
        return Presentation(("a", "r"), [(("r",), ("a", "r"))], name="houghton(1)")
    xs = tuple(f"x{i}" for i in range(1, n + 1))
    rels = [(("r",), xs)] + [((x,), ("a", x)) for x in xs]
    return Presentation(("a", "r") + xs, rels, name=f"houghton({n})")


def qaut() -> Presentation:
    return Presentation(("a", "x"), [(("x",), ("x", "a", "x"))], name="qaut")


def builtin(name, **params):
    """``(presentation, base generator)`` for a catalog entry."""
    if name == "thompson":
        return thompson(params.get("d", 2)), "x"
    if name == "houghton":
        return houghton(params.get("n", 2)), "r"
    if name == "qaut":
        return qaut(), "x"
    raise ValidationError(f"unknown catalog entry {name!r}; expected one of {BUILTIN_NAMES}")


_REF = re.compile(r"(thompson|houghton)\s*\(\s*(\d+)\s*\)\Z|qaut\Z")


def builtin_from_ref(ref):
    """Parse ``thompson(3)``, ``houghton(2)`` or ``qaut``; ``None`` if not builtin."""
    m = _REF.match(ref.strip())
    if not m:
        return None
    if m.group(1) == "thompson":
        return builtin("thompson", d=int(m.group(2)))
    if m.group(1) == "houghton":
        return builtin("houghton", n=int(m.group(2)))
    return builtin("qaut")


def houghton_rank(p: Presentation):
    """``n`` if ``p`` is ``houghton(n)``, else ``None``."""
    if p.generators[:2] != ("a", "r"):
        return None
    n = max(1, len(p.generators) - 2)
    return n if houghton(n) == p else None


def catalog_name(p: Presentation):
    """The catalog reference whose presentation has the content of ``p``, if any."""
    n = houghton_rank(p)
    if n is not None:
        return f"houghton({n})"
    if p.generators == ("x",) and len(p.relations) == 1:
        d = len(p.relations[0][1])
        if d >= 2 and thompson(d) == p:
            return f"thompson({d})"
    if p == qaut():
        return "qaut"
    return None


# Houghton maps ----------------------------------------------------------------

@dataclass(frozen=True)
class HoughtonMap:
    """A bijection of the vertices of ``n`` rays, a translation near each end.

    On ray ``i`` the vertices ``(i, k)``, ``k >= d_i``, go to ``(i, k - d_i + e_i)``;
    ``exceptions`` sends the ``d_i`` vertices peeled off each ray bijectively
    onto the ``e_i`` vertices peeled off the rays in the range.
    """

    n: int
    shifts: tuple                       # ((d_1, e_1), ..., (d_n, e_n))
    exceptions: dict = field(default_factory=dict, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "shifts", tuple((int(d), int(e)) for d, e in self.shifts))
        object.__setattr__(self, "exceptions", {tuple(a): tuple(b) for a, b in dict(self.exceptions).items()})
        if len(self.shifts) != self.n or self.n < 1:
            raise ValidationError(f"need {self.n} shift pairs")
        if any(d < 0 or e < 0 for d, e in self.shifts):
            raise ValidationError("negative shift")
        dom = {(i + 1, k) for i, (d, _) in enumerate(self.shifts) for k in range(d)}
        rng = {(i + 1, k) for i, (_, e) in enumerate(self.shifts) for k in range(e)}
        if set(self.exceptions) != dom or set(self.exceptions.values()) != rng or len(rng) != len(dom):
            raise ValidationError("exceptions are not a bijection between the peeled vertices")

    @classmethod
    def identity(cls, n):
        return cls(n, ((0, 0),) * n, {})

    def __call__(self, vertex):
        i, k = vertex
        if not (1 <= i <= self.n and k >= 0):
            raise ValidationError(f"no vertex {vertex}")
        d, e = self.shifts[i - 1]
        if k < d:
            return self.exceptions[(i, k)]
        return (i, k - d + e)

    def normalized(self) -> HoughtonMap:
        """Equivalent map with the fewest peeled vertices."""
        shifts = [list(s) for s in self.shifts]
        exc = dict(self.exceptions)
        changed = True
        while changed:
            changed = False
            for i, s in enumerate(shifts):
                d, e = s
                if d and e and exc.get((i + 1, d - 1)) == (i + 1, e - 1):
                    del exc[(i + 1, d - 1)]
                    s[0], s[1] = d - 1, e - 1
                    changed = True
        return HoughtonMap(self.n, tuple(map(tuple, shifts)), exc)

    def _key(self):
        m = self.normalized()
        return m.n, m.shifts, tuple(sorted(m.exceptions.items()))

    def __eq__(self, other):
        return isinstance(other, HoughtonMap) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def is_identity(self):
        return self == HoughtonMap.identity(self.n)

    def inverse(self) -> HoughtonMap:
        return HoughtonMap(self.n, tuple((e, d) for d, e in self.shifts),
                           {b: a for a, b in self.exceptions.items()})

    def compose(self, other: HoughtonMap) -> HoughtonMap:
        """``self ∘ other`` (``other`` first)."""
        if self.n != other.n:
            raise ValidationError("different numbers of rays")
        # peel enough of other's domain that its image clears self's peeled region
        shifts, exc = [], {}
        for i in range(self.n):
            d2, e2 = other.shifts[i]
            d1, e1 = self.shifts[i]
            extra = max(0, d1 - e2)
            shifts.append((d2 + extra, e1 + max(0, e2 - d1)))
        for i, (d, _) in enumerate(shifts):
            for k in range(d):
                exc[(i + 1, k)] = self(other((i + 1, k)))
        return HoughtonMap(self.n, tuple(shifts), exc).normalized()

    def __mul__(self, other):
        return self.compose(other)


EndTranslationSpec = HoughtonMap


def _houghton_space(n):
    p, base = builtin("houghton", n=n)
    return Space(p, base)


def _ray_prefix(n, i):
    return () if n == 1 else (i - 1,)


def _classify(n, addr):
    """``("tail", i, k)`` or ``("vertex", i, k)`` for a non-root ball address."""
    if n == 1:
        i, rest = 1, addr
    else:
        i, rest = addr[0] + 1, addr[1:]
    k = 0
    while k < len(rest) and rest[k] == 1:
        k += 1
    if k == len(rest):
        return "tail", i, k
    if k == len(rest) - 1 and rest[k] == 0:
        return "vertex", i, k
    raise ValidationError(f"address {addr} is not a Houghton ball")


def _tail_address(n, i, k):
    return _ray_prefix(n, i) + (1,) * k


def _vertex_address(n, i, k):
    return _ray_prefix(n, i) + (1,) * k + (0,)


def houghton_triple(hmap: HoughtonMap) -> DefiningTriple:
    n = hmap.n
    space = _houghton_space(n)
    pairs = {}
    for i, (d, e) in enumerate(hmap.shifts, start=1):
        pairs[_tail_address(n, i, d)] = _tail_address(n, i, e)
    for (i, k), (j, l) in hmap.exceptions.items():
        pairs[_vertex_address(n, i, k)] = _vertex_address(n, j, l)
    return DefiningTriple(space, pairs).check()


def houghton_build(hmap: HoughtonMap) -> Diagram:
    """Reduced ``(r, r)``-diagram over ``houghton(n)`` realizing ``hmap``."""
    return reduce(psi(houghton_triple(hmap)))


def houghton_interpret(d: Diagram) -> HoughtonMap:
    n = houghton_rank(d.presentation)
    if n is None:
        raise ValidationError("diagram is not over a houghton(n) presentation")
    if tuple(d.word(d.frame_top)) != ("r",) or tuple(d.word(d.frame_bottom)) != ("r",):
        raise ValidationError("need an (r, r)-diagram")
    t = triple_from_diagram(d, _houghton_space(n))
    if t.pairs == {ROOT: ROOT}:
        return HoughtonMap.identity(n)
    shifts = [[None, None] for _ in range(n)]
    exc = {}
    for a, b in t.pairs.items():
        ka, i, k = _classify(n, a)
        kb, j, l = _classify(n, b)
        if ka != kb:
            raise ValidationError("tail ball paired with a vertex")
        if ka == "tail":
            if i != j:
                raise ValidationError("ends permuted")
            shifts[i - 1] = [k, l]
        else:
            exc[(i, k)] = (j, l)
    return HoughtonMap(n, tuple(map(tuple, shifts)), exc).normalized()


HOUGHTON_EXAMPLE = HoughtonMap(2, ((0, 1), (1, 0)), {(2, 0): (1, 0)})


def format_hmap(m: HoughtonMap) -> str:
    lines = [f"n: {m.n}"]
    for i, (d, e) in enumerate(m.shifts, start=1):
        lines.append(f"shift {i}: {d} -> {e}")
    for (i, k), (j, l) in sorted(m.exceptions.items()):
        lines.append(f"exc: {i},{k} -> {j},{l}")
    return "\n".join(lines) + "\n"


_SHIFT = re.compile(r"shift\s+(\d+)\s*:\s*(\d+)\s*->\s*(\d+)\Z")
_EXC = re.compile(r"exc\s*:\s*(\d+)\s*,\s*(\d+)\s*->\s*(\d+)\s*,\s*(\d+)\Z")


def parse_hmap(text: str) -> HoughtonMap:
    n = None
    shifts, exc = {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("n:"):
            try:
                n = int(line[2:])
            except ValueError:
                raise ParseError("bad ray count", lineno) from None
            continue
        m = _SHIFT.match(line)
        if m:
            i, d, e = map(int, m.groups())
            if i in shifts:
                raise ParseError(f"shift {i} given twice", lineno)
            shifts[i] = (d, e)
            continue
        m = _EXC.match(line)
        if m:
            i, k, j, l = map(int, m.groups())
            if (i, k) in exc:
                raise ParseError(f"exception for {i},{k} given twice", lineno)
            exc[(i, k)] = (j, l)
            continue
        raise ParseError(f"unrecognized line {line!r}", lineno, 1)
    if n is None:
        raise ParseError("missing 'n:' line")
    if any(not 1 <= i <= n for i in shifts):
        raise ParseError("shift for a ray that does not exist")
    return HoughtonMap(n, tuple(shifts.get(i, (0, 0)) for i in range(1, n + 1)), exc)


# relabelling embedding --------------------------------------------------------

def relabel_embed(d: Diagram) -> Diagram:
    """Replace every ``a`` by ``x``: a diagram over qaut becomes one over thompson(3)."""
    if d.presentation != qaut():
        raise ValidationError("relabel_embed needs a diagram over qaut")
    labels = {w: "x" for w in d.labels}
    return Diagram(thompson(3), labels, d.transistors, d.frame_top, d.frame_bottom)

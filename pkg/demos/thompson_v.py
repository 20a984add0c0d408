"""Thompson's V as braided diagrams over <x | (x, xx)>.

Run: python3 demos/thompson_v.py
"""

from braidfss import catalog
from braidfss.calculus import equal, find_dipoles, is_identity, power, reduce
from braidfss.diagram import concatenate, format_diagram
from braidfss.fss import DefiningTriple, compose, evaluate, psi, triple_from_diagram
from braidfss.treespace import PointPrefix, Space, format_address

p, base = catalog.builtin("thompson", d=2)
X = Space(p, base)

# swap the two halves of the Cantor set
swap = DefiningTriple(X, {(0,): (1,), (1,): (0,)})
d = psi(swap)
print("psi(swap):", len(d.transistors), "transistors,", len(find_dipoles(d)), "dipoles")
print(format_diagram(reduce(d).renumbered(), "thompson(2)"))

for addr in [(0, 1, 1), (1, 0), (0, 0, 0, 1)]:
    img = evaluate(swap, PointPrefix(addr))
    print(f"swap({format_address(addr)}) = {format_address(img.address)}")

# 0.0 -> 0.1 -> 1 -> 0.0
cycle = DefiningTriple(X, {(0, 0): (0, 1), (0, 1): (1,), (1,): (0, 0)})
c = reduce(psi(cycle))
for k in range(1, 4):
    print(f"cycle^{k} trivial:", is_identity(power(c, k)))

# composing as triples and stacking as diagrams agree
sc = compose(swap, cycle)
print("swap after cycle:", sc)
print("psi respects the product:", equal(psi(sc), concatenate(psi(swap), psi(cycle))))
print("read back:", triple_from_diagram(reduce(psi(sc))))

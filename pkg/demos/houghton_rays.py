"""Houghton's H_2: two rays of vertices, translated near each end.

The map below pushes ray 1 outward, pulls ray 2 inward, and sends the
first vertex of ray 2 to the first vertex of ray 1.
"""

from braidfss.calculus import is_identity, multiply, power
from braidfss.catalog import HOUGHTON_EXAMPLE, HoughtonMap, format_hmap, houghton_build, houghton_interpret
from braidfss.diagram import format_diagram, invert

h = HOUGHTON_EXAMPLE
print(format_hmap(h))
for v in [(1, 0), (1, 5), (2, 0), (2, 1), (2, 9)]:
    print(v, "->", h(v))

d = houghton_build(h)
print(format_diagram(d.renumbered(), "houghton(2)"))
print("interpreted back:", houghton_interpret(d) == h)

# no finite power is trivial: points drift from ray 2 into ray 1
print([is_identity(power(d, k)) for k in range(1, 6)])
print("h h^-1 trivial:", is_identity(multiply(d, invert(d))))

# a transposition of two vertices has order 2
t = HoughtonMap(2, ((1, 1), (1, 1)), {(1, 0): (2, 0), (2, 0): (1, 0)})
dt = houghton_build(t)
print("transposition:", houghton_interpret(dt).exceptions, "order 2:", is_identity(power(dt, 2)))

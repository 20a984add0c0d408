"""Distances in the space of ends, and how the group rescales them."""

import math
import random

from braidfss.catalog import builtin
from braidfss.fss import canonicalize, evaluate
from braidfss.sampling import random_point, random_triple
from braidfss.treespace import PointPrefix, Space, distance, standard_decomposition

X = Space(*builtin("qaut"))
rng = random.Random(3)

p, q = PointPrefix((0, 2, 1), True), PointPrefix((0, 2, 0, 1, 1))
print(p, q, distance(p, q))

# every partition comes from expanding balls one at a time
part = X.partition([(0,), (1,), (2, 0), (2, 1), (2, 2, 0), (2, 2, 1), (2, 2, 2)])
print("expand:", standard_decomposition(part))

# inside a domain ball the element is a similarity with constant e^(depth B - depth phi(B))
t = canonicalize(random_triple(X, rng))
print(t)
for a, b in t.pairs.items():
    if X.is_leaf(a):
        continue
    x, y = (random_point(X, rng, 12) for _ in range(2))
    x, y = PointPrefix(a + x.address, x.terminal), PointPrefix(a + y.address, y.terminal)
    d0 = distance(x, y).value
    d1 = distance(evaluate(t, x), evaluate(t, y)).value
    if d0:
        print(f"ball {a}: ratio {d1 / d0:.4f}, predicted {math.exp(len(a) - len(b)):.4f}")

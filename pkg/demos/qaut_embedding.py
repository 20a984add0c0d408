"""Relabelling a -> x sends diagrams over <a, x | (x, xax)> to Thompson's V_3."""

import random

from braidfss.calculus import canonical_form, equal, is_reduced, multiply
from braidfss.catalog import qaut, relabel_embed
from braidfss.sampling import random_element
from braidfss.treespace import Space

rng = random.Random(7)
X = Space(qaut(), "x")
sample = [random_element(X, rng) for _ in range(40)]

homs = all(equal(relabel_embed(multiply(a, b)), multiply(relabel_embed(a), relabel_embed(b)))
           for a, b in zip(sample, sample[1:]))
print("homomorphism on 39 pairs:", homs)
print("reduced stays reduced:", all(is_reduced(relabel_embed(a)) for a in sample))

forms = {canonical_form(a) for a in sample}
images = {canonical_form(relabel_embed(a)) for a in sample}
print(f"{len(forms)} distinct inputs, {len(images)} distinct images")

import random

import pytest

from braidfss.calculus import (
    DipoleOccurrence, canonical_form, equal, find_dipoles, insert_dipole, insert_dipole_on,
    is_reduced, reduce, reduce_dipole, split_positive_negative,
)
from braidfss.diagram import (
    Diagram, Transistor, concatenate, identity_diagram, invert,
    permutation_diagram, validate,
)
from braidfss.errors import ValidationError
from braidfss.fss import DefiningTriple, canonicalize, psi
from braidfss.presentation import parse_presentation
from braidfss.sampling import random_diagram, random_element, random_triple
from braidfss.treespace import Space

from conftest import CATALOG
from helpers import expand, presentation, scrambled
from oracles import brute_force_equivalent

V2 = presentation("thompson2")
H2 = presentation("houghton2")


def same(d1, d2):
    return canonical_form(d1) == canonical_form(d2)


def expand_then_contract(crossed):
    labels = dict.fromkeys("abc", "x")
    bottom = ["c", "b"] if crossed else ["b", "c"]
    return Diagram(V2, labels | {"d": "x"},
                   {0: Transistor(["a"], ["b", "c"]), 1: Transistor(bottom, ["d"])}, ["a"], ["d"])


def contract_then_expand(crossed):
    labels = dict.fromkeys("abcde", "x")
    return Diagram(V2, labels, {0: Transistor(["a", "b"], ["c"]), 1: Transistor(["c"], ["d", "e"])},
                   ["a", "b"], ["e", "d"] if crossed else ["d", "e"])


def test_no_dipoles_in_identity():
    assert find_dipoles(identity_diagram(V2, "xxx")) == []


def test_one_dipole():
    up = expand(H2, "r")
    d = concatenate(up, invert(up))
    (occ,) = find_dipoles(d)
    upper = d.frame_top[0]
    assert d.transistors[occ.upper].top == (upper,)
    r = reduce_dipole(d, occ)
    assert same(r, identity_diagram(H2, "r"))
    with pytest.raises(ValidationError):
        reduce_dipole(r, occ)


def test_positive_over_negative_dipole():
    d = expand_then_contract(crossed=False)
    assert validate(d).ok
    (occ,) = find_dipoles(d)
    assert occ == DipoleOccurrence(1, 0, ("b", "c"))
    assert same(reduce(d), identity_diagram(V2, "x"))


def test_crossed_pair_is_not_a_dipole():
    d = expand_then_contract(crossed=True)
    assert validate(d).ok and find_dipoles(d) == []


def test_negative_over_positive_dipole():
    # splice: the wires on the upper transistor's top continue as the
    # wires on the lower transistor's bottom, in order
    straight, crossed = contract_then_expand(False), contract_then_expand(True)
    assert same(reduce(straight), identity_diagram(V2, "xx"))
    assert same(reduce(crossed), permutation_diagram(V2, "xx", [1, 0]))


def test_swap_element_is_reduced_pair():
    swap = DefiningTriple(Space(V2, "x"), {(0,): (1,), (1,): (0,)})
    r = reduce(psi(swap))
    assert len(r.transistors) == 2 and is_reduced(r)
    assert same(r, expand_then_contract(crossed=True))


def test_maximal_triple_image_has_no_dipoles(rng):
    for name in CATALOG:
        space = Space(*CATALOG[name])
        for _ in range(20):
            t = canonicalize(random_triple(space, rng))
            assert find_dipoles(psi(t)) == []


def test_reduce_counts(rng):
    p, base = CATALOG["thompson3"]
    for _ in range(30):
        d = random_diagram(p, rng, (base,), 12)
        steps = 0
        while True:
            occs = find_dipoles(d)
            if not occs:
                break
            n = len(d.transistors)
            d = reduce_dipole(d, occs[0])
            assert len(d.transistors) == n - 2
            steps += 1
        assert is_reduced(d)


def test_reduce_idempotent(rng):
    p, base = CATALOG["qaut"]
    for _ in range(30):
        r = reduce(random_diagram(p, rng, (base,), 12))
        assert same(reduce(r), r)


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_inserted_dipoles_cancel(name, rng):
    p, base = CATALOG[name]
    for _ in range(40):
        d = random_diagram(p, rng, (base,), 10)
        e = d
        for _ in range(rng.randint(1, 3)):
            cands = [w for w in e.labels if any(l == (e.labels[w],) for l, _ in p.relations)]
            e = insert_dipole(e, rng.choice(sorted(cands)))
        assert validate(e).ok
        assert same(reduce(e), reduce(d))
        assert equal(d, e)


def test_insert_contracting_dipole_on_bottom_wires():
    d = expand(V2, "x")
    e = insert_dipole_on(d, [2, 1], ("x", "x"))
    assert validate(e).ok and len(e.transistors) == 3
    assert equal(d, e)


def test_canonical_form_ignores_ids(rng):
    p, base = CATALOG["houghton2"]
    for _ in range(40):
        d = random_diagram(p, rng, (base,), 12)
        assert canonical_form(scrambled(d, rng)) == canonical_form(d)


def test_canonical_form_separates():
    assert canonical_form(identity_diagram(H2, ["x1"])) != canonical_form(identity_diagram(H2, ["x2"]))
    assert canonical_form(permutation_diagram(V2, "xx", [1, 0])) != canonical_form(identity_diagram(V2, "xx"))


def test_canonical_form_matches_brute_force(rng):
    for name in CATALOG:
        p, base = CATALOG[name]
        pool = []
        for _ in range(60):
            d = reduce(random_diagram(p, rng, (base,), 4))
            if len(d.transistors) <= 4:
                pool.append(d)
        pool += [scrambled(d, rng) for d in pool[:20]]
        for _ in range(300):
            a, b = rng.choice(pool), rng.choice(pool)
            assert (canonical_form(a) == canonical_form(b)) == brute_force_equivalent(a, b)


def test_equal_examples():
    space = Space(V2, "x")
    swap = psi(DefiningTriple(space, {(0,): (1,), (1,): (0,)}))
    one = identity_diagram(V2, "x")
    assert equal(concatenate(swap, swap), one)
    assert not equal(swap, one)
    with pytest.raises(ValidationError):
        equal(one, identity_diagram(H2, "r"))


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_confluence(name, rng):
    p, base = CATALOG[name]
    for _ in range(125):
        d = random_diagram(p, rng, (base,), 12)
        forms = {canonical_form(reduce(d, random.Random(rng.random()))) for _ in range(2)}
        assert len(forms) == 1


@pytest.mark.parametrize("name", sorted(CATALOG))
def test_associativity_up_to_equivalence(name, rng):
    p, base = CATALOG[name]
    for _ in range(30):
        a = random_diagram(p, rng, (base,), 5)
        b = random_diagram(p, rng, a.word(a.frame_bottom), 5)
        c = random_diagram(p, rng, b.word(b.frame_bottom), 5)
        assert same(concatenate(concatenate(a, b), c), concatenate(a, concatenate(b, c)))
        assert same(invert(concatenate(a, b)), concatenate(invert(b), invert(a)))


class TestSplit:
    def test_identity(self):
        a, b = split_positive_negative(identity_diagram(V2, "xx"))
        assert same(a, identity_diagram(V2, "xx")) and same(b, identity_diagram(V2, "xx"))

    def test_positive(self):
        d = expand(V2, "x")
        a, b = split_positive_negative(d)
        assert same(a, d) and same(b, identity_diagram(V2, "xx"))

    def test_random(self, rng):
        for name in CATALOG:
            p, base = CATALOG[name]
            for _ in range(40):
                d = reduce(random_diagram(p, rng, (base,), 12))
                a, b = split_positive_negative(d)
                assert all(a.is_positive(t) for t in a.transistors)
                assert all(b.is_positive(t) for t in b.transistors)
                assert same(concatenate(a, invert(b)), d)

    def test_psi_image_splits_into_partition_diagrams(self, rng):
        from braidfss.fss import partition_diagram

        space = Space(*CATALOG["qaut"])
        for _ in range(20):
            t = canonicalize(random_triple(space, rng))
            a, b = split_positive_negative(psi(t))
            assert same(a, partition_diagram(t.range))
            # b is the domain diagram followed by a wire permutation
            assert len(b.transistors) == len(partition_diagram(t.domain).transistors)

    def test_preconditions(self):
        with pytest.raises(ValidationError):
            split_positive_negative(concatenate(expand(V2, "x"), invert(expand(V2, "x"))))
        p = parse_presentation("gen: x\nrel: x x -> x")
        with pytest.raises(ValidationError):
            split_positive_negative(identity_diagram(p, "x"))


def test_group_axioms(space, rng):
    one = identity_diagram(space.presentation, (space.base,))
    for _ in range(20):
        a, b, c = (random_element(space, rng) for _ in range(3))
        assert equal(concatenate(concatenate(a, b), c), concatenate(a, concatenate(b, c)))
        assert equal(concatenate(one, a), a) and equal(concatenate(a, one), a)
        assert equal(concatenate(a, invert(a)), one) and equal(concatenate(invert(a), a), one)

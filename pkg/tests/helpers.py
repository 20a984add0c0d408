from braidfss.diagram import Diagram, Transistor

from conftest import CATALOG


def presentation(name):
    return CATALOG[name][0]


def expand(p, letter):
    """One positive transistor: ``letter`` on top, its relation's right side below."""
    right = next(r for l, r in p.relations if l == (letter,))
    labels = {0: letter, **{i + 1: y for i, y in enumerate(right)}}
    wires = list(range(1, len(right) + 1))
    return Diagram(p, labels, {0: Transistor([0], wires)}, [0], wires)


def scrambled(d, rng):
    """Same diagram with wire and transistor ids shuffled into a sparse range."""
    ws = sorted(d.labels)
    ts = sorted(d.transistors)
    new_w = rng.sample(range(10 * len(ws) + 10), len(ws))
    new_t = rng.sample(range(10 * len(ts) + 10), len(ts))
    return d.relabel_ids(dict(zip(ws, new_w)), dict(zip(ts, new_t)))


def random_hmap(n, rng, max_shift=5, max_exceptions=6):
    """Random end-translation data with matching peeled-vertex counts."""
    from braidfss.catalog import HoughtonMap

    while True:
        shifts = [(rng.randint(0, max_shift), rng.randint(0, max_shift)) for _ in range(n)]
        if sum(d for d, _ in shifts) == sum(e for _, e in shifts) <= max_exceptions:
            break
    dom = [(i + 1, k) for i, (d, _) in enumerate(shifts) for k in range(d)]
    img = [(i + 1, k) for i, (_, e) in enumerate(shifts) for k in range(e)]
    rng.shuffle(img)
    return HoughtonMap(n, tuple(shifts), dict(zip(dom, img)))

"""Shared helpers for the test suite: random element generators and the
independent brute-force oracles the library is checked against."""

import itertools
from math import comb

from sstorus.torus import Basis, ExponentVector, TorusElement


def random_label(spec, rng):
    q = spec.q
    return ExponentVector(
        tuple(rng.randrange(q) for _ in range(spec.m)),
        tuple(rng.randrange(q) for _ in range(spec.n)),
    )


def random_element(spec, rng, max_terms=3, basis=Basis.BINOMIAL):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[random_label(spec, rng)] = rng.randrange(1, spec.p)
    return TorusElement(spec, basis, terms)


def integer_monomial_product(u, v):
    """Untruncated product of two binomial monomials over the integers.

    Returns a map from flat exponent tuples (which may reach beyond q) to
    exact integer coefficients, using
    C(x,a) C(x,b) = sum_i C(a+b-i, a-i) C(b, b-i) C(x, a+b-i) coordinatewise.
    """
    out = {(): 1}
    for ka, kb in zip(u.a + u.b, v.a + v.b):
        nxt = {}
        for ex, c in out.items():
            for i in range(min(ka, kb) + 1):
                coeff = comb(ka + kb - i, ka - i) * comb(kb, kb - i)
                key = ex + (ka + kb - i,)
                nxt[key] = nxt.get(key, 0) + c * coeff
        out = nxt
    return out


def naive_multiply_terms(f, g):
    """Quadratic reference product of two binomial-basis elements, computed
    with exact integers first and truncated/reduced at the very end."""
    spec = f.spec
    p, q, m = spec.p, spec.q, spec.m
    acc = {}
    for ev1, c1 in f.terms.items():
        for ev2, c2 in g.terms.items():
            for key, c in integer_monomial_product(ev1, ev2).items():
                if all(e < q for e in key):
                    acc[key] = (acc.get(key, 0) + c1 * c2 * c) % p
    return {
        ExponentVector(key[:m], key[m:]): c for key, c in acc.items() if c
    }


def matching_defect(ev, spec):
    """Brute-force maximum bipartite matching between a-slots and b-slots
    joined when a_i + b_j is divisible by p."""
    p = spec.p
    edges = [
        (i, j)
        for i in range(spec.m)
        for j in range(spec.n)
        if (ev.a[i] + ev.b[j]) % p == 0
    ]
    best = 0
    for size in range(min(spec.m, spec.n), 0, -1):
        for subset in itertools.combinations(edges, size):
            lefts = {i for i, _ in subset}
            rights = {j for _, j in subset}
            if len(lefts) == size and len(rights) == size:
                return size
    return best


def coeff_vectors(elements, labels):
    index = {ev: t for t, ev in enumerate(labels)}
    out = []
    for e in elements:
        vec = [0] * len(labels)
        for ev, c in e.terms.items():
            vec[index[ev]] = c
        out.append(vec)
    return out

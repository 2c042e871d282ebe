"""Defect, canonical labels, reduction to canonical form, equivalence
classes, and their closed-form counts.

The defect of a label (a_1..a_m | b_1..b_n) is the largest number of
disjoint index pairs (i, j) with a_i + b_j = 0 mod p.  The equivalence
relation is generated by permuting each block separately and, whenever
a_1 + b_1 = 0 mod p, replacing (a_1, b_1) by any pair with the same sum
mod q.  Every class contains exactly one canonical label:

  defect 0:  both blocks weakly increasing;
  defect d > 0:  a = (0^e, then entries in (0, p) weakly increasing),
                 b = (0^(f-1), a multiple of p, then entries in (0, p)
                 weakly increasing), min(e, f) = d, and no residual pair
                 (i > e, j > f) summing to 0 mod p.

A class of positive defect is determined by its defect, the residue
multisets of the unmatched entries and the total sum mod q; a class of
defect zero is just a permutation orbit.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb
from typing import Iterator, Optional

from .torus import ExponentVector, TorusSpec


@dataclass(frozen=True)
class CanonicalLabel:
    """A canonical label with its defect and, for defect > 0, the split
    indices (e, f) of the canonical shape."""

    ev: ExponentVector
    defect: int
    e: Optional[int] = None
    f: Optional[int] = None


@dataclass(frozen=True)
class EquivClass:
    canonical: CanonicalLabel
    members: tuple


def is_special(ev: ExponentVector, spec: TorusSpec) -> bool:
    """No pair sum a_i + b_j divisible by p."""
    p = spec.p
    return all((av + bv) % p for av in ev.a for bv in ev.b)


def is_ordinary(ev: ExponentVector, spec: TorusSpec) -> bool:
    return not is_special(ev, spec)


def _residue_counts(ev: ExponentVector, p: int):
    ca = [0] * p
    for v in ev.a:
        ca[v % p] += 1
    cb = [0] * p
    for v in ev.b:
        cb[v % p] += 1
    return ca, cb


def defect(ev: ExponentVector, spec: TorusSpec) -> int:
    """Maximum number of disjoint pairs (i, j) with a_i + b_j = 0 mod p.

    The compatibility graph is a disjoint union of complete bipartite
    pieces, one per residue, so a residue count realizes the maximum
    matching.
    """
    spec.check_label(ev)
    p = spec.p
    ca, cb = _residue_counts(ev, p)
    return sum(min(ca[rho], cb[(p - rho) % p]) for rho in range(p))


def _unmatched_residues(ev: ExponentVector, p: int):
    """Residue counts of the entries left out of a maximum matching."""
    ca, cb = _residue_counts(ev, p)
    ua = [ca[rho] - min(ca[rho], cb[(p - rho) % p]) for rho in range(p)]
    ub = [cb[tau] - min(cb[tau], ca[(p - tau) % p]) for tau in range(p)]
    return ua, ub


def class_signature(ev: ExponentVector, spec: TorusSpec):
    """Complete invariant of the equivalence class of ev.

    Defect zero: the pair of sorted blocks.  Positive defect: the defect,
    the unmatched residue multisets of both blocks, and the total mod q.
    """
    d = defect(ev, spec)
    if d == 0:
        return (0, tuple(sorted(ev.a)), tuple(sorted(ev.b)))
    p = spec.p
    ua, ub = _unmatched_residues(ev, p)
    ra = tuple(rho for rho in range(p) for _ in range(ua[rho]))
    rb = tuple(tau for tau in range(p) for _ in range(ub[tau]))
    return (d, ra, rb, ev.total() % spec.q)


def is_canonical(ev: ExponentVector, spec: TorusSpec) -> bool:
    spec.check_label(ev)
    p = spec.p
    d = defect(ev, spec)
    a, b = ev.a, ev.b
    if d == 0:
        return all(a[i] <= a[i + 1] for i in range(len(a) - 1)) and all(
            b[j] <= b[j + 1] for j in range(len(b) - 1)
        )

    e = 0
    while e < len(a) and a[e] == 0:
        e += 1
    if e == 0:
        return False
    tail_a = a[e:]
    if not all(0 < v < p for v in tail_a):
        return False
    if any(tail_a[i] > tail_a[i + 1] for i in range(len(tail_a) - 1)):
        return False

    z = 0
    while z < len(b) and b[z] == 0:
        z += 1
    if z == len(b):
        f = len(b)
        tail_b = ()
    elif b[z] % p == 0:
        f = z + 1
        tail_b = b[z + 1 :]
    elif z >= 1:
        f = z
        tail_b = b[z:]
    else:
        return False
    if f < 1:
        return False
    if not all(0 < v < p for v in tail_b):
        return False
    if any(tail_b[i] > tail_b[i + 1] for i in range(len(tail_b) - 1)):
        return False

    if min(e, f) != d:
        return False
    return all((av + bv) % p for av in tail_a for bv in tail_b)


def canonicalize(ev: ExponentVector, spec: TorusSpec) -> CanonicalLabel:
    """The canonical label equivalent to ev.

    Defect zero just sorts both blocks.  For positive defect the matched
    entries collapse into the canonical shape, the unmatched entries are
    replaced by their residues, and the slot at position f absorbs whatever
    multiple of p keeps the total constant mod q.
    """
    spec.check_label(ev)
    p, q = spec.p, spec.q
    d = defect(ev, spec)
    if d == 0:
        return CanonicalLabel(
            ExponentVector(tuple(sorted(ev.a)), tuple(sorted(ev.b))), 0
        )
    ua, ub = _unmatched_residues(ev, p)
    tail_a = tuple(rho for rho in range(1, p) for _ in range(ua[rho]))
    tail_b = tuple(tau for tau in range(1, p) for _ in range(ub[tau]))
    e = d + ua[0]
    f = d + ub[0]
    residue_sum = sum(rho * ua[rho] for rho in range(p)) + sum(
        tau * ub[tau] for tau in range(p)
    )
    bf = (ev.total() - residue_sum) % q
    new_a = (0,) * e + tail_a
    new_b = (0,) * (f - 1) + (bf,) + tail_b
    return CanonicalLabel(ExponentVector(new_a, new_b), d, e, f)


def _neighbors(ev: ExponentVector, spec: TorusSpec) -> Iterator[ExponentVector]:
    """Images of ev under the generating relations."""
    p, q = spec.p, spec.q
    for idx in range(spec.m - 1):
        yield ev.swapped_a(idx)
    for idx in range(spec.n - 1):
        yield ev.swapped_b(idx)
    if spec.n >= 1 and (ev.a[0] + ev.b[0]) % p == 0:
        t = (ev.a[0] + ev.b[0]) % q
        for a1 in range(q):
            yield ev.replaced_a(0, a1).replaced_b(0, (t - a1) % q)


def enumerate_equivalence_class(
    canonical: CanonicalLabel, spec: TorusSpec
) -> EquivClass:
    """Breadth-first closure of the canonical label under the generating
    relations; members come back sorted."""
    if not is_canonical(canonical.ev, spec):
        raise ValueError(f"{canonical.ev} is not canonical")
    seen = {canonical.ev}
    queue = deque([canonical.ev])
    while queue:
        cur = queue.popleft()
        for nxt in _neighbors(cur, spec):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return EquivClass(canonical, tuple(sorted(seen)))


def enumerate_canonical(spec: TorusSpec) -> list:
    """All canonical labels, in lexicographic order."""
    return [
        canonicalize(ev, spec) for ev in spec.labels() if is_canonical(ev, spec)
    ]


def compositions(total: int, parts: int) -> Iterator[tuple]:
    """Positive integer compositions of `total` into `parts` parts, in
    lexicographic order."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def count_c(m: int, n: int, q: int, p: int) -> int:
    """Number of defect-zero canonical labels: weakly increasing blocks with
    no pair sum divisible by p.

    Grouping the b block by how many residue classes l it occupies leaves
    q - l*q/p admissible values for every a entry.
    """
    if n == 0:
        return comb(q + m - 1, m)
    if m == 0:
        return comb(q + n - 1, n)
    qp = q // p
    total = 0
    for l in range(1, min(p - 1, n) + 1):
        inner = 0
        for comp in compositions(n, l):
            prod = 1
            for nj in comp:
                prod *= comb(qp + nj - 1, nj)
            inner += prod
        total += comb(p, l) * comb(q - qp * l + m - 1, m) * inner
    return total


def count_c_prime(m: int, n: int, p: int) -> int:
    """Like count_c at q = p but with every entry strictly inside (0, p)."""
    if m == 0 and n == 0:
        return 1
    if n == 0:
        return comb(m + p - 2, m)
    if m == 0:
        return comb(n + p - 2, n)
    total = 0
    for l in range(1, min(n, p - 2) + 1):
        total += comb(p - 1, l) * comb(n - 1, n - l) * comb(m + p - l - 2, m)
    return total


def count_defect(m: int, n: int, d: int, q: int, p: int) -> int:
    """Number of canonical labels of defect d >= 1.

    Scales linearly in q/p; at q = p it sums the residual counts over the
    admissible split positions (e, f) with min(e, f) = d.
    """
    if d < 1:
        raise ValueError("defect counts require d >= 1")
    qp = q // p
    total = 0
    for e in range(d, m + 1):
        total += count_c_prime(m - e, n - d, p)
    for f in range(d + 1, n + 1):
        total += count_c_prime(m - d, n - f, p)
    return qp * total


def _count_canonical_total(m: int, n: int, q: int, p: int) -> int:
    qp = q // p
    positive = 0
    for e in range(1, m + 1):
        for f in range(1, n + 1):
            positive += count_c_prime(m - e, n - f, p)
    return count_c(m, n, q, p) + qp * positive


def count_canonical_total(spec: TorusSpec) -> int:
    """Total number of canonical labels for the given algebra."""
    if spec.m < 1 or spec.n < 1:
        raise ValueError("canonical counting requires m, n >= 1")
    return _count_canonical_total(spec.m, spec.n, spec.q, spec.p)


def count_ordinary_points_m1(m: int, p: int) -> int:
    """Number of labels (a_1..a_m | b) over [0, p) with some a_i + b = 0
    mod p, by inclusion-exclusion."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = 0
    for i in range(m):
        term = comb(m, i) * p ** (i + 1)
        total += term if (i + m - 1) % 2 == 0 else -term
    return total

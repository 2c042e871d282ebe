"""Supersymmetric basis elements and an independent linear-algebra check.

Three constructions produce supersymmetric elements: symmetrized special
idempotents, the residue sums over all ordinary idempotents, and the class
sums H attached to canonical labels.  `ss_nullspace_oracle` recomputes the
whole supersymmetric subspace from its defining linear constraints by exact
Gaussian elimination, so dimensions, spans and closed-form counts can be
verified against each other; `verify_basis` bundles those checks into one
report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import List, Optional

from . import fp_linalg
from .canonical import (
    CanonicalLabel,
    count_canonical_total,
    count_c,
    count_c_prime,
    enumerate_canonical,
    enumerate_equivalence_class,
    is_ordinary,
    is_special,
)
from .idempotents import evaluate_point, idempotent_h
from .supersymmetry import is_supersymmetric, phi, symmetrize
from .torus import Basis, ExponentVector, TorusElement, TorusSpec


def build_H(canonical: CanonicalLabel, spec: TorusSpec) -> TorusElement:
    """Class sum: coefficient 1 at every member of the equivalence class."""
    cls = enumerate_equivalence_class(canonical, spec)
    return TorusElement(spec, Basis.IDEMPOTENT, {ev: 1 for ev in cls.members})


def build_special(ev: ExponentVector, spec: TorusSpec) -> TorusElement:
    """Symmetrized idempotent at a special label (no pair sum divisible by p)."""
    spec.check_label(ev)
    if not is_special(ev, spec):
        raise ValueError(f"label {ev} is ordinary: some a_i + b_j is divisible by p")
    return symmetrize(ev, spec)


def build_Ha(spec: TorusSpec, a: int) -> TorusElement:
    """Sum of all ordinary idempotents whose label total is a mod q."""
    if not 0 <= a < spec.q:
        raise ValueError(f"residue {a} outside [0, {spec.q})")
    q = spec.q
    terms = {
        ev: 1
        for ev in spec.labels()
        if ev.total() % q == a and is_ordinary(ev, spec)
    }
    return TorusElement(spec, Basis.IDEMPOTENT, terms)


def _coeff_vector(elem: TorusElement, index: dict) -> list:
    vec = [0] * len(index)
    for ev, c in elem.terms.items():
        vec[index[ev]] = c
    return vec


def ss_nullspace_oracle(
    spec: TorusSpec, all_pairs: bool = False
) -> List[TorusElement]:
    """Basis of the supersymmetric subspace computed from scratch.

    Unknowns are the idempotent coordinates.  Constraints: invariance under
    the adjacent transpositions of each block, and vanishing of the
    coordinates of phi(f, 1, 1) at every label with a_1 + b_1 divisible by p
    (exactly divisibility by x_1 + y_1).  With `all_pairs` the divisibility
    rows are added for every pair (i, j) instead of (1, 1) alone.

    Solved by exact elimination mod p; the result is in reduced echelon form
    with pivots in lexicographic label order.
    """
    if spec.n < 1:
        raise ValueError("the supersymmetric subspace needs n >= 1")
    p = spec.p
    labels = list(spec.labels())
    index = {ev: t for t, ev in enumerate(labels)}
    nlab = len(labels)
    rows = []

    for ev in labels:
        for idx in range(spec.m - 1):
            other = ev.swapped_a(idx)
            if ev < other:
                row = [0] * nlab
                row[index[ev]] = 1
                row[index[other]] = p - 1
                rows.append(row)
        for idx in range(spec.n - 1):
            other = ev.swapped_b(idx)
            if ev < other:
                row = [0] * nlab
                row[index[ev]] = 1
                row[index[other]] = p - 1
                rows.append(row)

    pairs = (
        [(i, j) for i in range(1, spec.m + 1) for j in range(1, spec.n + 1)]
        if all_pairs
        else [(1, 1)]
    )
    for i, j in pairs:
        bad = [ev for ev in labels if (ev.a[i - 1] + ev.b[j - 1]) % p == 0]
        images = []
        for ev in labels:
            ph = phi(idempotent_h(spec, ev), i, j)
            images.append([evaluate_point(ph, beta) for beta in bad])
        for bpos in range(len(bad)):
            row = [images[t][bpos] for t in range(nlab)]
            if any(row):
                rows.append(row)

    basis_rows = fp_linalg.nullspace_basis(rows, nlab, p)
    out = []
    for vec in basis_rows:
        terms = {labels[t]: v for t, v in enumerate(vec) if v}
        out.append(TorusElement(spec, Basis.IDEMPOTENT, terms))
    return out


def gl11_generators(spec: TorusSpec) -> List[TorusElement]:
    """For m = n = 1: the idempotents h_(a|b) with a + b prime to p, then the
    cyclic sums sum_i h_(i | pl - i mod q) for l = 0 .. q/p - 1."""
    if spec.m != 1 or spec.n != 1:
        raise ValueError("these generators are defined for m = n = 1 only")
    p, q = spec.p, spec.q
    out = []
    for a in range(q):
        for b in range(q):
            if (a + b) % p:
                ev = ExponentVector((a,), (b,))
                out.append(TorusElement(spec, Basis.IDEMPOTENT, {ev: 1}))
    for l in range(q // p):
        terms = {
            ExponentVector((i,), ((p * l - i) % q,)): 1 for i in range(q)
        }
        out.append(TorusElement(spec, Basis.IDEMPOTENT, terms))
    return out


def dim_closed_form(spec: TorusSpec) -> int:
    """Dimension of the supersymmetric subspace by the applicable closed form.

    Dispatches on (m, n); every branch agrees with the canonical-label count.
    """
    m, n, p, q = spec.m, spec.n, spec.p, spec.q
    if m < 1 or n < 1:
        raise ValueError("dimension formulas require m, n >= 1")
    qp = q // p
    if m == 1 and n == 1:
        return q * (q - qp) + qp
    if n == 1:
        return q * comb(q - qp + m - 1, m) + qp * comb(p + m - 2, m - 1)
    if m == 1:
        return q * comb(q - qp + n - 1, n) + qp * comb(p + n - 2, n - 1)
    cross = 0
    for e in range(1, m):
        for f in range(1, n):
            cross += count_c_prime(e, f, p)
    return count_c(m, n, q, p) + qp * (
        -1 + comb(p + m - 2, m - 1) + comb(p + n - 2, n - 1) + cross
    )


@dataclass
class CountReport:
    """Outcome of the verification bundle for one algebra."""

    spec: TorusSpec
    closed_form: int
    enumerated: int
    oracle_dim: int
    h_basis_ok: bool
    partition_ok: bool
    gl11_span_ok: Optional[bool]
    failures: list = field(default_factory=list, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        spec = self.spec
        return {
            "spec": {
                "m": spec.m,
                "n": spec.n,
                "p": spec.p,
                "r": spec.r,
                "q": spec.q,
            },
            "closed_form": self.closed_form,
            "enumerated": self.enumerated,
            "oracle_dim": self.oracle_dim,
            "h_basis_ok": self.h_basis_ok,
            "partition_ok": self.partition_ok,
            "gl11_span_ok": self.gl11_span_ok,
        }


def verify_basis(spec: TorusSpec) -> CountReport:
    """Build every class sum H and verify the basis claims.

    Checks, all reported rather than raised: each H is supersymmetric; the
    H family is linearly independent; its span, cardinality and the oracle's
    agree with the closed-form count; the classes partition the label set;
    and for m = n = 1 the listed generators span the same space.
    """
    failures = []
    p = spec.p
    labels = list(spec.labels())
    index = {ev: t for t, ev in enumerate(labels)}

    canonicals = enumerate_canonical(spec)
    classes = [enumerate_equivalence_class(c, spec) for c in canonicals]
    h_elements = [
        TorusElement(spec, Basis.IDEMPOTENT, {ev: 1 for ev in cls.members})
        for cls in classes
    ]

    seen: dict = {}
    for cls in classes:
        for ev in cls.members:
            seen[ev] = seen.get(ev, 0) + 1
    partition_ok = len(seen) == len(labels) and all(v == 1 for v in seen.values())
    if not partition_ok:
        failures.append("classes do not partition the label set")

    for c, h in zip(canonicals, h_elements):
        if not is_supersymmetric(h):
            failures.append(f"class sum at {c.ev} is not supersymmetric")

    h_vecs = [_coeff_vector(h, index) for h in h_elements]
    independent = fp_linalg.rank(h_vecs, p) == len(h_vecs)
    if not independent:
        failures.append("class sums are linearly dependent")

    oracle = ss_nullspace_oracle(spec)
    oracle_vecs = [_coeff_vector(o, index) for o in oracle]
    span_ok = len(oracle) == len(h_elements) and fp_linalg.same_row_space(
        h_vecs, oracle_vecs, p
    )
    if not span_ok:
        failures.append("class-sum span differs from the oracle span")

    closed = dim_closed_form(spec)
    enumerated = len(canonicals)
    if not closed == enumerated == count_canonical_total(spec):
        failures.append(
            f"count mismatch: closed form {closed}, enumerated {enumerated}"
        )
    if len(oracle) != closed:
        failures.append(
            f"oracle dimension {len(oracle)} differs from closed form {closed}"
        )

    gl11_ok = None
    if spec.m == 1 and spec.n == 1:
        gen_vecs = [_coeff_vector(g, index) for g in gl11_generators(spec)]
        gl11_ok = fp_linalg.same_row_space(gen_vecs, oracle_vecs, p)
        if not gl11_ok:
            failures.append("rank-(1|1) generators do not span the oracle space")

    h_basis_ok = (
        independent
        and span_ok
        and not any("not supersymmetric" in f for f in failures)
    )
    return CountReport(
        spec=spec,
        closed_form=closed,
        enumerated=enumerated,
        oracle_dim=len(oracle),
        h_basis_ok=h_basis_ok,
        partition_ok=partition_ok,
        gl11_span_ok=gl11_ok,
        failures=failures,
    )

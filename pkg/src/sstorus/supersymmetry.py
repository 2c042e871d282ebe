"""Shift-difference calculus on the torus algebra.

The shift s_ij replaces x_i by x_i - 1 and y_j by y_j + 1, expanded termwise
through

    C(x - 1, k) = sum_{l=0}^{k} (-1)^(k-l) C(x, l)
    C(y + 1, k) = C(y, k-1) + C(y, k),

and phi_ij(f) = f - s_ij(f) measures the failure of shift invariance.  An
element is supersymmetric when it is symmetric in the x variables and in the
y variables separately and every phi_ij(f) is divisible by x_i + y_j; for a
bisymmetric element the single pair (1, 1) already decides all pairs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from . import torus
from .idempotents import from_idempotent_basis, to_idempotent_basis
from .torus import (
    Basis,
    ExponentVector,
    TorusElement,
    TorusSpec,
    _require_basis,
    _require_same_spec,
)


def _check_pair(spec: TorusSpec, i: int, j: int):
    if not 1 <= i <= spec.m:
        raise ValueError(f"x index {i} out of range 1..{spec.m}")
    if not 1 <= j <= spec.n:
        raise ValueError(f"y index {j} out of range 1..{spec.n}")


def shift_substitute(f: TorusElement, i: int, j: int) -> TorusElement:
    """Apply the shift x_i -> x_i - 1, y_j -> y_j + 1 termwise."""
    _require_basis(f, Basis.BINOMIAL)
    spec = f.spec
    _check_pair(spec, i, j)
    ix, jy = i - 1, j - 1
    p = spec.p
    acc: dict = {}
    for ev, c in f.terms.items():
        k = ev.a[ix]
        l = ev.b[jy]
        b_parts = ((l, 1),) if l == 0 else ((l - 1, 1), (l, 1))
        for t in range(k + 1):
            ca = (-1) ** (k - t) % p
            base = ev.replaced_a(ix, t)
            for lb, cb in b_parts:
                new = base.replaced_b(jy, lb)
                nc = (acc.get(new, 0) + c * ca * cb) % p
                if nc:
                    acc[new] = nc
                elif new in acc:
                    del acc[new]
    return TorusElement(spec, Basis.BINOMIAL, acc)


def phi(f: TorusElement, i: int, j: int) -> TorusElement:
    """The difference f - s_ij(f)."""
    return torus.add(f, torus.scale(-1, shift_substitute(f, i, j)))


@dataclass(frozen=True)
class DaggerWitness:
    """Outcome of a divisibility test by x_i + y_j.

    When `holds`, `quotient` is the unique preimage supported on labels with
    a_i + b_j prime to p, so that (x_i + y_j) * quotient recovers the input.
    """

    holds: bool
    quotient: Optional[TorusElement]


def is_multiple_of_linear(g: TorusElement, i: int, j: int) -> DaggerWitness:
    """Decide divisibility by x_i + y_j inside the truncated algebra.

    Multiplication by x_i + y_j scales the idempotent coordinate at (a|b) by
    a_i + b_j, so g is a multiple exactly when its coordinates vanish
    wherever p divides a_i + b_j.
    """
    spec = g.spec
    _check_pair(spec, i, j)
    gi = g if g.basis is Basis.IDEMPOTENT else to_idempotent_basis(g)
    p = spec.p
    quot = {}
    for ev, c in gi.terms.items():
        s = (ev.a[i - 1] + ev.b[j - 1]) % p
        if s == 0:
            return DaggerWitness(False, None)
        quot[ev] = c * pow(s, -1, p) % p
    return DaggerWitness(True, TorusElement(spec, Basis.IDEMPOTENT, quot))


def is_bisymmetric(f: TorusElement) -> bool:
    """Invariance under permuting the x slots and the y slots separately.

    Adjacent transpositions generate both symmetric groups, so checking the
    generators on the coefficient map suffices.
    """
    spec = f.spec
    terms = f.terms
    for idx in range(spec.m - 1):
        for ev, c in terms.items():
            if terms.get(ev.swapped_a(idx), 0) != c:
                return False
    for idx in range(spec.n - 1):
        for ev, c in terms.items():
            if terms.get(ev.swapped_b(idx), 0) != c:
                return False
    return True


def symmetrize(ev: ExponentVector, spec: TorusSpec) -> TorusElement:
    """Sum of h over the distinct permutations of ev, coefficient 1 each."""
    spec.check_label(ev)
    orbit = set()
    for pa in set(itertools.permutations(ev.a)):
        for pb in set(itertools.permutations(ev.b)):
            orbit.add(ExponentVector(pa, pb))
    return TorusElement(spec, Basis.IDEMPOTENT, {o: 1 for o in orbit})


def satisfies_dagger(f: TorusElement, i: int, j: int) -> bool:
    """Whether phi_ij(f) is divisible by x_i + y_j."""
    fb = f if f.basis is Basis.BINOMIAL else from_idempotent_basis(f)
    return is_multiple_of_linear(phi(fb, i, j), i, j).holds


def is_supersymmetric(f: TorusElement, check_all_pairs: bool = False) -> bool:
    """Bisymmetry plus the (1, 1) divisibility condition.

    With `check_all_pairs` the remaining pairs are recomputed as a
    diagnostic; for a bisymmetric element they must all agree with (1, 1).
    """
    spec = f.spec
    if spec.n < 1:
        raise ValueError("supersymmetry needs at least one y variable")
    sym = is_bisymmetric(f)
    d11 = satisfies_dagger(f, 1, 1)
    if check_all_pairs and sym:
        for i in range(1, spec.m + 1):
            for j in range(1, spec.n + 1):
                if satisfies_dagger(f, i, j) != d11:
                    raise RuntimeError(
                        f"divisibility at pair ({i}, {j}) disagrees with (1, 1) "
                        "on a bisymmetric element"
                    )
    return sym and d11


def freeze_slices(f: TorusElement, i: int, j: int) -> dict:
    """Group terms by the exponents of every variable other than (x_i, y_j).

    Returns a map from the frozen exponent data to elements of the rank-(1|1)
    algebra with the same p and r.
    """
    _require_basis(f, Basis.BINOMIAL)
    spec = f.spec
    _check_pair(spec, i, j)
    ix, jy = i - 1, j - 1
    spec11 = TorusSpec(1, 1, spec.p, spec.r, cap=spec.cap)
    grouped: dict = {}
    for ev, c in f.terms.items():
        rest = (ev.a[:ix] + ev.a[ix + 1 :], ev.b[:jy] + ev.b[jy + 1 :])
        key = ExponentVector((ev.a[ix],), (ev.b[jy],))
        grouped.setdefault(rest, {})[key] = c
    return {
        rest: TorusElement(spec11, Basis.BINOMIAL, terms)
        for rest, terms in grouped.items()
    }


def star_system_check(
    a_coeffs: TorusElement, b_coeffs: TorusElement, i: int, j: int
) -> bool:
    """Coefficientwise check that the shift difference of the first element
    equals (x_i + y_j) times the second.

    Both inputs are binomial-basis coefficient families over the same
    algebra.  For every in-range label L the system requires

        -sum (-1)^(P_i - L_i) a_P  =  (L_i + L_j) b_L + L_i b_(L-e_i) + L_j b_(L-e_j)

    mod p, with P running over in-range labels that agree with L away from
    slots (i, j), P_i >= L_i, L_j <= P_j <= L_j + 1 and P != L.  Out-of-range
    coefficients are treated as zero.
    """
    _require_same_spec(a_coeffs, b_coeffs)
    _require_basis(a_coeffs, Basis.BINOMIAL)
    _require_basis(b_coeffs, Basis.BINOMIAL)
    spec = a_coeffs.spec
    _check_pair(spec, i, j)
    ix, jy = i - 1, j - 1
    p, q = spec.p, spec.q
    A = a_coeffs.terms
    B = b_coeffs.terms

    candidates = set()
    for ev in A:
        bj = ev.b[jy]
        for t in range(ev.a[ix] + 1):
            lam = ev.replaced_a(ix, t)
            candidates.add(lam)
            if bj > 0:
                candidates.add(lam.replaced_b(jy, bj - 1))
    for ev in B:
        candidates.add(ev)
        if ev.a[ix] + 1 < q:
            candidates.add(ev.replaced_a(ix, ev.a[ix] + 1))
        if ev.b[jy] + 1 < q:
            candidates.add(ev.replaced_b(jy, ev.b[jy] + 1))

    for lam in candidates:
        li, lj = lam.a[ix], lam.b[jy]
        lhs = 0
        for t in range(li, q):
            sign = -1 if (t - li) & 1 else 1
            shifted = lam.replaced_a(ix, t)
            for pj in (lj, lj + 1):
                if pj >= q or (t == li and pj == lj):
                    continue
                c = A.get(shifted.replaced_b(jy, pj), 0)
                if c:
                    lhs -= sign * c
        rhs = (li + lj) * B.get(lam, 0)
        if li:
            rhs += li * B.get(lam.replaced_a(ix, li - 1), 0)
        if lj:
            rhs += lj * B.get(lam.replaced_b(jy, lj - 1), 0)
        if (lhs - rhs) % p:
            return False
    return True

"""Sparse exact arithmetic in truncated divided-power algebras of diagonal
tori over prime fields.

An element is an F_p-linear combination of monomials

    C(x_1, a_1) ... C(x_m, a_m) * C(y_1, b_1) ... C(y_n, b_n),

all exponents in [0, q) with q = p^r.  Distinct variables commute; within a
single variable the product expands as

    C(x, a) C(x, b) = sum_{i=0}^{min(a,b)} C(a+b-i, a-i) C(b, b-i) C(x, a+b-i),

and summands with exponent >= q are dropped: adding a-i to b then carries in
base p, so the dropped integer coefficient is divisible by p anyway.

Besides this binomial basis, elements can carry an idempotent basis tag (see
`idempotents`); operations here insist on matching tags and raise
`MismatchError` otherwise.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Iterator

from .modp import is_prime

DEFAULT_CAP = 10_000_000


class MismatchError(ValueError):
    """Operands belong to different algebras or carry different basis tags."""


class CapExceededError(ValueError):
    """The requested algebra has more basis labels than the configured cap."""


class Basis(enum.Enum):
    BINOMIAL = "binomial"
    IDEMPOTENT = "idempotent"


@dataclass(frozen=True, order=True)
class ExponentVector:
    """A label (a_1..a_m | b_1..b_n); compares lexicographically."""

    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(int(v) for v in self.a))
        object.__setattr__(self, "b", tuple(int(v) for v in self.b))

    def total(self) -> int:
        return sum(self.a) + sum(self.b)

    def replaced_a(self, idx: int, value: int) -> "ExponentVector":
        a = self.a
        return ExponentVector(a[:idx] + (value,) + a[idx + 1 :], self.b)

    def replaced_b(self, idx: int, value: int) -> "ExponentVector":
        b = self.b
        return ExponentVector(self.a, b[:idx] + (value,) + b[idx + 1 :])

    def swapped_a(self, idx: int) -> "ExponentVector":
        """Swap entries idx and idx+1 of the a block."""
        a = list(self.a)
        a[idx], a[idx + 1] = a[idx + 1], a[idx]
        return ExponentVector(tuple(a), self.b)

    def swapped_b(self, idx: int) -> "ExponentVector":
        b = list(self.b)
        b[idx], b[idx + 1] = b[idx + 1], b[idx]
        return ExponentVector(self.a, tuple(b))

    def __str__(self):
        return "(%s|%s)" % (
            ",".join(map(str, self.a)),
            ",".join(map(str, self.b)),
        )


@dataclass(frozen=True)
class TorusSpec:
    """Ambient parameters of one truncated torus algebra.

    m x-variables, n y-variables, exponents below q = p^r.  Construction
    fails once q^(m+n) exceeds `cap`; the cap is configuration, not
    identity, so equality and hashing ignore it.
    """

    m: int
    n: int
    p: int
    r: int
    cap: int = field(default=DEFAULT_CAP, compare=False, repr=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("need at least one x variable (m >= 1)")
        if self.n < 0:
            raise ValueError("n must be non-negative")
        if self.r < 1:
            raise ValueError("r must be positive")
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")
        if self.dimension > self.cap:
            raise CapExceededError(
                f"q^(m+n) = {self.dimension} exceeds the label cap {self.cap}"
            )

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def dimension(self) -> int:
        return self.q ** (self.m + self.n)

    def labels(self) -> Iterator[ExponentVector]:
        """All labels, in lexicographic order."""
        rng = range(self.q)
        for a in itertools.product(rng, repeat=self.m):
            for b in itertools.product(rng, repeat=self.n):
                yield ExponentVector(a, b)

    def check_label(self, ev: ExponentVector):
        if len(ev.a) != self.m or len(ev.b) != self.n:
            raise ValueError(
                f"label {ev} has wrong shape for (m, n) = ({self.m}, {self.n})"
            )
        q = self.q
        for v in ev.a + ev.b:
            if not 0 <= v < q:
                raise ValueError(f"label {ev} has an exponent outside [0, {q})")


class TorusElement:
    """A sparse element: finite map from labels to nonzero residues mod p.

    Immutable by convention; every operation returns a fresh element.  Two
    elements are equal iff their specs, basis tags and term maps agree.
    """

    __slots__ = ("spec", "basis", "terms")

    def __init__(self, spec: TorusSpec, basis: Basis, terms):
        p = spec.p
        cleaned = {}
        items = terms.items() if hasattr(terms, "items") else terms
        for ev, c in items:
            c = int(c) % p
            if not c:
                continue
            spec.check_label(ev)
            cleaned[ev] = c
        self.spec = spec
        self.basis = basis
        self.terms = cleaned

    def coefficient(self, ev: ExponentVector) -> int:
        return self.terms.get(ev, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items())

    def support(self):
        return sorted(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TorusElement):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.basis is other.basis
            and self.terms == other.terms
        )

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return add(self, scale(-1, other))

    def __neg__(self):
        return scale(-1, self)

    def __mul__(self, other):
        if isinstance(other, TorusElement):
            if self.basis is Basis.IDEMPOTENT and other.basis is Basis.IDEMPOTENT:
                from . import idempotents

                return idempotents.multiply_idempotent_basis(self, other)
            return multiply(self, other)
        return scale(other, self)

    def __rmul__(self, other):
        return scale(other, self)

    def __str__(self):
        if not self.terms:
            return "0"
        mono = "h%s" if self.basis is Basis.IDEMPOTENT else "m%s"
        parts = []
        for ev, c in self.sorted_terms():
            head = "" if c == 1 else f"{c}*"
            parts.append(head + mono % ev)
        return " + ".join(parts)

    def __repr__(self):
        return (
            f"TorusElement({self.spec!r}, {self.basis.value!r}, "
            f"{dict(self.sorted_terms())!r})"
        )


def _require_same_spec(f: TorusElement, g: TorusElement):
    if f.spec != g.spec:
        raise MismatchError(f"spec mismatch: {f.spec} vs {g.spec}")


def _require_basis(f: TorusElement, basis: Basis):
    if f.basis is not basis:
        raise MismatchError(f"expected {basis.value}-basis element, got {f.basis.value}")


def zero(spec: TorusSpec, basis: Basis = Basis.BINOMIAL) -> TorusElement:
    return TorusElement(spec, basis, {})


def one(spec: TorusSpec) -> TorusElement:
    """The unit: the all-zero-exponent monomial in the binomial basis."""
    ev = ExponentVector((0,) * spec.m, (0,) * spec.n)
    return TorusElement(spec, Basis.BINOMIAL, {ev: 1})


def add(f: TorusElement, g: TorusElement) -> TorusElement:
    _require_same_spec(f, g)
    if f.basis is not g.basis:
        raise MismatchError("cannot add elements in different bases")
    p = f.spec.p
    terms = dict(f.terms)
    for ev, c in g.terms.items():
        nc = (terms.get(ev, 0) + c) % p
        if nc:
            terms[ev] = nc
        elif ev in terms:
            del terms[ev]
    return TorusElement(f.spec, f.basis, terms)


def scale(c, f: TorusElement) -> TorusElement:
    cv = int(c) % f.spec.p
    if cv == 0:
        return zero(f.spec, f.basis)
    if cv == 1:
        return f
    p = f.spec.p
    return TorusElement(f.spec, f.basis, {ev: cc * cv % p for ev, cc in f.terms.items()})


@lru_cache(maxsize=None)
def _coordinate_table(k1: int, k2: int, p: int, q: int):
    """Expansion of C(x, k1) C(x, k2) truncated below q, as ((exp, coeff), ...)."""
    out = []
    for i in range(min(k1, k2) + 1):
        e = k1 + k2 - i
        if e >= q:
            continue
        c = comb(e, k1 - i) * comb(k2, k2 - i) % p
        if c:
            out.append((e, c))
    return tuple(out)


@lru_cache(maxsize=None)
def _monomial_product(key1: tuple, key2: tuple, p: int, q: int):
    """Coordinatewise product of two monomials given by flat exponent keys."""
    partial = [((), 1)]
    for k1, k2 in zip(key1, key2):
        tab = _coordinate_table(k1, k2, p, q)
        partial = [
            (ex + (e,), c * ce % p) for ex, c in partial for e, ce in tab
        ]
    return tuple((ex, c) for ex, c in partial if c)


def mono_product_univariate(k_a: int, k_b: int, spec: TorusSpec) -> dict:
    """Expansion of C(x, k_a) C(x, k_b) in exponents < q, as {exponent: coeff}."""
    if not (0 <= k_a < spec.q and 0 <= k_b < spec.q):
        raise ValueError(f"exponents must lie in [0, {spec.q})")
    return dict(_coordinate_table(k_a, k_b, spec.p, spec.q))


def multiply(f: TorusElement, g: TorusElement) -> TorusElement:
    """Product of two binomial-basis elements (commutative, associative)."""
    _require_same_spec(f, g)
    _require_basis(f, Basis.BINOMIAL)
    _require_basis(g, Basis.BINOMIAL)
    spec = f.spec
    p, q, m = spec.p, spec.q, spec.m
    gterms = [(ev.a + ev.b, c) for ev, c in g.terms.items()]
    acc: dict = {}
    for ev1, c1 in f.terms.items():
        key1 = ev1.a + ev1.b
        for key2, c2 in gterms:
            c12 = c1 * c2
            for ex, c in _monomial_product(key1, key2, p, q):
                acc[ex] = (acc.get(ex, 0) + c12 * c) % p
    terms = {}
    for ex, c in acc.items():
        if c:
            terms[ExponentVector(ex[:m], ex[m:])] = c
    return TorusElement(spec, Basis.BINOMIAL, terms)


def multiply_by_coordinate(f: TorusElement, block: str, index: int) -> TorusElement:
    """Left-multiply by the degree-one coordinate x_index or y_index.

    Uses x C(x, k) = (k+1) C(x, k+1) + k C(x, k); the k+1 = q summand has
    coefficient q = 0 mod p and is dropped.
    """
    _require_basis(f, Basis.BINOMIAL)
    spec = f.spec
    if block == "x":
        if not 1 <= index <= spec.m:
            raise ValueError(f"x index {index} out of range 1..{spec.m}")
    elif block == "y":
        if not 1 <= index <= spec.n:
            raise ValueError(f"y index {index} out of range 1..{spec.n}")
    else:
        raise ValueError("block must be 'x' or 'y'")
    idx = index - 1
    p, q = spec.p, spec.q
    acc: dict = {}

    def bump(ev, c):
        if c:
            nc = (acc.get(ev, 0) + c) % p
            if nc:
                acc[ev] = nc
            elif ev in acc:
                del acc[ev]

    for ev, c in f.terms.items():
        k = ev.a[idx] if block == "x" else ev.b[idx]
        bump(ev, c * k)
        if k + 1 < q:
            up = ev.replaced_a(idx, k + 1) if block == "x" else ev.replaced_b(idx, k + 1)
            bump(up, c * (k + 1))
    return TorusElement(spec, Basis.BINOMIAL, acc)


def multiply_by_linear(f: TorusElement, i: int, j: int) -> TorusElement:
    """Left-multiply by x_i + y_j (1-based indices into the two blocks)."""
    return add(
        multiply_by_coordinate(f, "x", i),
        multiply_by_coordinate(f, "y", j),
    )


def element_to_dict(f: TorusElement) -> dict:
    """JSON-ready form; terms sorted by label, coefficients in [1, p)."""
    spec = f.spec
    return {
        "m": spec.m,
        "n": spec.n,
        "p": spec.p,
        "r": spec.r,
        "basis": f.basis.value,
        "terms": [
            {"a": list(ev.a), "b": list(ev.b), "c": c} for ev, c in f.sorted_terms()
        ],
    }


def element_from_dict(data: dict, cap: int = DEFAULT_CAP) -> TorusElement:
    try:
        spec = TorusSpec(int(data["m"]), int(data["n"]), int(data["p"]), int(data["r"]), cap=cap)
        basis = Basis(data["basis"])
        raw = data["terms"]
    except CapExceededError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed element object: {exc}") from None
    terms = {}
    for entry in raw:
        ev = ExponentVector(tuple(entry["a"]), tuple(entry["b"]))
        c = int(entry["c"])
        if not 0 < c < spec.p:
            raise ValueError(f"coefficient {c} outside [1, {spec.p})")
        if ev in terms:
            raise ValueError(f"duplicate term at {ev}")
        terms[ev] = c
    return TorusElement(spec, basis, terms)


def element_to_json(f: TorusElement) -> str:
    return json.dumps(element_to_dict(f), indent=2)


def element_from_json(text: str, cap: int = DEFAULT_CAP) -> TorusElement:
    return element_from_dict(json.loads(text), cap=cap)

"""Binomial-coefficient arithmetic modulo a prime.

Everything here is exact: big integers in, canonical residues out.  The
base-p digit product (Lucas) and the carry criterion (Kummer) are
implemented independently of each other so they can be cross-checked
against plain integer binomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality test; cached, meant for small moduli."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class Prime:
    """A modulus that has been checked to be prime."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    def __int__(self) -> int:
        return self.p

    def __index__(self) -> int:
        return self.p

    def __str__(self) -> str:
        return str(self.p)


def _prime_value(p) -> int:
    v = p.p if isinstance(p, Prime) else int(p)
    if not is_prime(v):
        raise ValueError(f"modulus {v} is not prime")
    return v


@dataclass(frozen=True, eq=False)
class FpScalar:
    """Canonical representative of a residue class in the prime field F_p.

    Arithmetic is closed and always reduces back into [0, p); ints mix
    freely on either side.
    """

    value: int
    p: int

    def __post_init__(self):
        p = _prime_value(self.p)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "value", self.value % p)

    def _coerce(self, other):
        if isinstance(other, FpScalar):
            if other.p != self.p:
                raise ValueError("cannot mix scalars with different moduli")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(self.value + v, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(self.value - v, self.p)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(v - self.value, self.p)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FpScalar(self.value * v, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FpScalar(-self.value, self.p)

    def inverse(self) -> "FpScalar":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FpScalar(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpScalar):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


def binom_mod_p(n: int, k: int, p) -> FpScalar:
    """C(n, k) mod p via the base-p digit product.

    Exact for arbitrarily large n, k; returns 0 whenever k > n.
    """
    pv = _prime_value(p)
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if k > n:
        return FpScalar(0, pv)
    acc = 1
    while k:
        nd, n = n % pv, n // pv
        kd, k = k % pv, k // pv
        if kd > nd:
            return FpScalar(0, pv)
        acc = acc * comb(nd, kd) % pv
    return FpScalar(acc, pv)


def has_padic_carry(a: int, b: int, p) -> bool:
    """True iff adding a and b in base p produces at least one carry.

    Equivalent to C(a+b, a) being divisible by p.
    """
    pv = _prime_value(p)
    if a < 0 or b < 0:
        raise ValueError("a and b must be non-negative")
    while a and b:
        if a % pv + b % pv >= pv:
            return True
        a //= pv
        b //= pv
    return False


def alternating_power_sum(a: int, b: int) -> int:
    """Exact value of sum_{r=0}^{a} (-1)^r C(a, r) r^b, with 0^0 = 1.

    The sum vanishes for 0 <= b < a and equals (-1)^a a! at b = a.
    """
    if a < 1:
        raise ValueError("a must be positive")
    if b < 0:
        raise ValueError("b must be non-negative")
    total = 0
    for r in range(a + 1):
        term = comb(a, r) * r**b
        total = total - term if r & 1 else total + term
    return total

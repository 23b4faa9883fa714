"""Exact arithmetic in F_p (p prime, p > 3) and root finding for degree <= 4.

Two deliberately redundant strategies back the nontrivial operations:

* ``sqrt`` scans the whole field for p <= 2**20 (one cached table per
  modulus) and runs Tonelli-Shanks above; the test suite checks both
  agree where their domains overlap.
* ``roots`` scans the whole field for p <= 2**20 and, for larger p,
  reduces to the product of distinct linear factors via gcd with
  x^p - x, then splits it with gcd(g, (x+d)^((p-1)/2) - 1) for a fixed
  schedule d = 1, 2, 3, ...

Moduli are machine-word primes (p < 2**63); there is no multiprecision
tier because nothing here needs one.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DegenerateInput, DivisionByZero, ModulusMismatch

SCAN_LIMIT = 1 << 20
MAX_MODULUS = 1 << 63

# Witnesses that make Miller-Rabin deterministic for every n < 3.3e24,
# which covers the whole machine-word range.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for base in _MR_BASES:
        x = pow(base, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@lru_cache(maxsize=None)
def _check_modulus(p: int) -> None:
    if not isinstance(p, int) or p <= 3:
        raise DegenerateInput(f"modulus must be a prime > 3, got {p}")
    if p >= MAX_MODULUS:
        raise DegenerateInput(f"modulus must fit a machine word (< 2**63), got {p}")
    if not is_prime(p):
        raise DegenerateInput(f"modulus must be prime, got {p}")


@dataclass(frozen=True)
class FieldElement:
    """Residue in F_p; immutable, usable as a dict key."""

    value: int
    modulus: int

    def __post_init__(self):
        _check_modulus(self.modulus)
        object.__setattr__(self, "value", self.value % self.modulus)

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, int):
            return FieldElement(other, self.modulus)
        if not isinstance(other, FieldElement):
            return NotImplemented
        if other.modulus != self.modulus:
            raise ModulusMismatch(
                f"mixed moduli {self.modulus} and {other.modulus}")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value + other.value, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value - other.value, self.modulus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.value * other.value, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.modulus), self.modulus)

    def inverse(self) -> "FieldElement":
        if self.value == 0:
            raise DivisionByZero(f"inverse of 0 mod {self.modulus}")
        return FieldElement(pow(self.value, self.modulus - 2, self.modulus), self.modulus)

    def is_zero(self) -> bool:
        return self.value == 0

    def sqrt(self):
        return sqrt(self)

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"{self.value} (mod {self.modulus})"


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


@lru_cache(maxsize=32)
def _sqrt_table(p: int):
    """residue -> smallest square root, -1 where none; one scan per modulus."""
    x = np.arange(p, dtype=np.int64)
    squares = (x * x) % p
    table = np.full(p, -1, dtype=np.int64)
    table[squares[::-1]] = x[::-1]
    return table


def _sqrt_scan(a: int, p: int):
    r = int(_sqrt_table(p)[a])
    return None if r < 0 else r


def _sqrt_tonelli(a: int, p: int):
    """Tonelli-Shanks; returns one root or None for non-residues."""
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def sqrt(a: FieldElement):
    """Both square roots of a, smallest representative first.

    Returns a 1-tuple for a = 0, None when a is a non-residue.
    """
    p = a.modulus
    r = _sqrt_scan(a.value, p) if p <= SCAN_LIMIT else _sqrt_tonelli(a.value, p)
    if r is None:
        return None
    if r == 0:
        return (FieldElement(0, p),)
    r = min(r, p - r)
    return (FieldElement(r, p), FieldElement(p - r, p))


class Poly:
    """Dense polynomial over F_p, coefficients lowest degree first.

    General-purpose arithmetic plus ``roots`` for degrees 1..4 (the
    two-torsion cubic and the halving quartic are the real customers).
    """

    __slots__ = ("modulus", "coeffs")

    def __init__(self, modulus: int, coeffs):
        _check_modulus(modulus)
        coeffs = list(coeffs)
        for c in coeffs:
            if isinstance(c, FieldElement) and c.modulus != modulus:
                raise ModulusMismatch(
                    f"coefficient mod {c.modulus} in a polynomial mod {modulus}")
        vals = [int(c) % modulus for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self.modulus = modulus
        self.coeffs = tuple(vals)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficients(self):
        return tuple(FieldElement(c, self.modulus) for c in self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, Poly) and self.modulus == other.modulus
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.modulus, self.coeffs))

    def __repr__(self):
        if self.is_zero():
            return f"Poly(0 mod {self.modulus})"
        terms = " + ".join(f"{c}*x^{i}" if i else str(c)
                           for i, c in enumerate(self.coeffs) if c)
        return f"Poly({terms} mod {self.modulus})"

    def _same_field(self, other: "Poly"):
        if self.modulus != other.modulus:
            raise ModulusMismatch(
                f"mixed moduli {self.modulus} and {other.modulus}")

    def __add__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly(self.modulus, [x + y for x, y in zip(a, b)])

    def __sub__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly(self.modulus, [x - y for x, y in zip(a, b)])

    def __mul__(self, other: "Poly") -> "Poly":
        self._same_field(other)
        if self.is_zero() or other.is_zero():
            return Poly(self.modulus, [])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        p = self.modulus
        for i, ci in enumerate(self.coeffs):
            for j, cj in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + ci * cj) % p
        return Poly(p, out)

    def scale(self, k: int) -> "Poly":
        return Poly(self.modulus, [c * k for c in self.coeffs])

    def evaluate(self, x) -> FieldElement:
        xv = int(x) % self.modulus
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * xv + c) % self.modulus
        return FieldElement(acc, self.modulus)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead_inv = pow(self.coeffs[-1], self.modulus - 2, self.modulus)
        return self.scale(lead_inv)

    def divmod(self, divisor: "Poly"):
        self._same_field(divisor)
        if divisor.is_zero():
            raise DivisionByZero("polynomial division by zero")
        p = self.modulus
        rem = list(self.coeffs)
        d = divisor.coeffs
        dn = len(d) - 1
        lead_inv = pow(d[-1], p - 2, p)
        quot = [0] * max(len(rem) - dn, 0)
        for i in range(len(rem) - 1, dn - 1, -1):
            factor = rem[i] * lead_inv % p
            quot[i - dn] = factor
            if factor:
                for j, dj in enumerate(d):
                    rem[i - dn + j] = (rem[i - dn + j] - factor * dj) % p
        return Poly(p, quot), Poly(p, rem[:dn])

    def __mod__(self, divisor: "Poly") -> "Poly":
        return self.divmod(divisor)[1]

    def gcd(self, other: "Poly") -> "Poly":
        self._same_field(other)
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def mulmod(self, other: "Poly", modpoly: "Poly") -> "Poly":
        return (self * other) % modpoly

    def powmod(self, exponent: int, modpoly: "Poly") -> "Poly":
        result = Poly(self.modulus, [1])
        base = self % modpoly
        e = exponent
        while e:
            if e & 1:
                result = result.mulmod(base, modpoly)
            base = base.mulmod(base, modpoly)
            e >>= 1
        return result

    @classmethod
    def x(cls, modulus: int) -> "Poly":
        return cls(modulus, [0, 1])

    @classmethod
    def from_roots(cls, modulus: int, roots_) -> "Poly":
        out = cls(modulus, [1])
        for r in roots_:
            out = out * cls(modulus, [-int(r), 1])
        return out


def _roots_scan(f: Poly):
    """Distinct roots by evaluating f on the whole field (vectorized)."""
    p = f.modulus
    x = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(f.coeffs):
        acc = (acc * x + c) % p
    return [int(r) for r in np.nonzero(acc == 0)[0]]


def _roots_gcd(f: Poly):
    """Distinct roots via gcd with x^p - x and fixed-schedule splitting."""
    p = f.modulus
    x = Poly.x(p)
    xp = x.powmod(p, f)
    g = f.gcd(xp - x)  # product of the distinct linear factors
    if g.degree <= 0:
        return []
    found = []
    stack = [g]
    while stack:
        h = stack.pop()
        if h.degree == 1:
            # monic x + c  ->  root -c
            found.append((-h.coeffs[0]) % p)
            continue
        delta = 0
        while True:
            delta += 1
            shifted = Poly(p, [delta, 1])
            w = shifted.powmod((p - 1) // 2, h) - Poly(p, [1])
            d = h.gcd(w)
            if 0 < d.degree < h.degree:
                stack.append(d)
                stack.append(h.divmod(d)[0].monic())
                break
    return sorted(found)


def roots(f: Poly):
    """All roots of f in F_p with multiplicity, sorted; degree must be 1..4."""
    if f.is_zero():
        raise DegenerateInput("root finding needs a nonzero polynomial")
    if not 1 <= f.degree <= 4:
        raise DegenerateInput(f"degree must be 1..4, got {f.degree}")
    p = f.modulus
    distinct = _roots_scan(f) if p <= SCAN_LIMIT else _roots_gcd(f)
    out = []
    for r in sorted(distinct):
        rem = f
        while True:
            quot, remainder = rem.divmod(Poly(p, [-r, 1]))
            if not remainder.is_zero():
                break
            out.append(FieldElement(r, p))
            rem = quot
            if rem.degree < 1:
                break
    return out

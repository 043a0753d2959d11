"""Exact ground-field scalars: rationals and prime-field elements.

Rationals are ``fractions.Fraction`` values from the standard library, which
already guarantees the canonical form this package relies on (positive
denominator, fully reduced, 0/1 for zero, ``str()`` gives ``"num/den"`` with
the denominator omitted when it is 1). :func:`rational` is the checked
constructor. Prime-field arithmetic gets its own element class.

No floating point appears anywhere in this module or its callers.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DivisionByZero,
    FieldMismatch,
    NoPrimitiveRoot,
    NotPrime,
    ZeroDenominator,
)

Rational = Fraction

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every modulus this package accepts."""
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
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime divisors of n >= 1, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def rational(num: int, den: int = 1) -> Fraction:
    """Canonical rational num/den; raises ZeroDenominator when den = 0."""
    if den == 0:
        raise ZeroDenominator(f"denominator of {num}/{den} is zero")
    return Fraction(num, den)


class PrimeFieldElement:
    """An element of F_p, stored as a representative in [0, p)."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, PrimeFieldElement):
            if other.p != self.p:
                raise FieldMismatch(f"F_{self.p} vs F_{other.p}")
            return other
        if isinstance(other, int):
            return PrimeFieldElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value - other.value, self.p)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return PrimeFieldElement(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return PrimeFieldElement(-self.value, self.p)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * invert_mod_p(other)

    def __pow__(self, e: int):
        if e < 0:
            return invert_mod_p(self) ** (-e)
        return PrimeFieldElement(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, PrimeFieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"PrimeFieldElement({self.value}, p={self.p})"


def invert_mod_p(a: PrimeFieldElement) -> PrimeFieldElement:
    """Multiplicative inverse in F_p; raises DivisionByZero on a = 0."""
    if a.value == 0:
        raise DivisionByZero(f"0 has no inverse in F_{a.p}")
    return PrimeFieldElement(pow(a.value, -1, a.p), a.p)


def multiplicative_order(a: PrimeFieldElement) -> int:
    """Least k >= 1 with a^k = 1; always divides p - 1."""
    if a.value == 0:
        raise DivisionByZero(f"0 has no multiplicative order in F_{a.p}")
    acc, k = a.value, 1
    while acc != 1:
        acc = acc * a.value % a.p
        k += 1
    return k


def find_nth_root_of_unity(p: int, n: int) -> PrimeFieldElement:
    """Smallest representative in [1, p) of exact order n.

    One exists iff n divides p - 1; the smallest-representative rule makes the
    choice reproducible across runs and implementations.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n < 1 or (p - 1) % n != 0:
        raise NoPrimitiveRoot(f"F_{p} has no primitive {n}th root of unity: {n} does not divide {p - 1}")
    for v in range(1, p):
        cand = PrimeFieldElement(v, p)
        if multiplicative_order(cand) == n:
            return cand
    raise NoPrimitiveRoot(f"no element of order {n} in F_{p}")  # unreachable for prime p


class PrimeField:
    """Descriptor for F_p. Primality is validated once, at construction."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        self.p = p

    def zero(self) -> PrimeFieldElement:
        return PrimeFieldElement(0, self.p)

    def one(self) -> PrimeFieldElement:
        return PrimeFieldElement(1, self.p)

    def from_int(self, k: int) -> PrimeFieldElement:
        return PrimeFieldElement(k, self.p)

    def characteristic(self) -> int:
        return self.p

    def height(self) -> int:
        return 1

    def coerce(self, value) -> PrimeFieldElement:
        if isinstance(value, PrimeFieldElement):
            if value.p != self.p:
                raise FieldMismatch(f"element of F_{value.p} is not in F_{self.p}")
            return value
        if isinstance(value, int):
            return PrimeFieldElement(value, self.p)
        raise FieldMismatch(f"{value!r} is not an element of F_{self.p}")

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __str__(self):
        return f"GF({self.p})"


class RationalField:
    """Descriptor for the rationals; elements are fractions.Fraction values."""

    __slots__ = ()

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def from_int(self, k: int) -> Fraction:
        return Fraction(k)

    def characteristic(self) -> int:
        return 0

    def height(self) -> int:
        return 1

    def coerce(self, value) -> Fraction:
        if isinstance(value, Fraction):
            return value
        if isinstance(value, int):
            return Fraction(value)
        raise FieldMismatch(f"{value!r} is not a rational")

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rationals")

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return "QQ"

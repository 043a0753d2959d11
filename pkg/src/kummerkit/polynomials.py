"""Dense univariate polynomials over an explicit coefficient field.

Coefficients are stored degree-ascending with the leading (highest-index)
coefficient nonzero; the zero polynomial has an empty coefficient tuple.
The coefficient field is any of the descriptors from :mod:`kummerkit.scalars`
or :mod:`kummerkit.tower`; all that is required of its elements is exact
ring arithmetic plus division.
"""

from __future__ import annotations

import functools

from .errors import CharacteristicDividesN, DivisionByZero, FieldMismatch, NotMonic
from .scalars import PrimeField, RationalField, prime_factors


class Polynomial:
    """Immutable dense polynomial; ``coeffs[i]`` is the coefficient of X^i."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = [field.coerce(c) for c in coeffs]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def zero(cls, field) -> "Polynomial":
        return cls(field, ())

    @classmethod
    def one(cls, field) -> "Polynomial":
        return cls(field, (field.one(),))

    @classmethod
    def x(cls, field) -> "Polynomial":
        return cls(field, (field.zero(), field.one()))

    @classmethod
    def constant(cls, field, c) -> "Polynomial":
        return cls(field, (c,))

    @classmethod
    def x_pow_minus_const(cls, field, n: int, c) -> "Polynomial":
        """X^n - c."""
        coeffs = [-field.coerce(c)] + [field.zero()] * (n - 1) + [field.one()]
        return cls(field, coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self):
        if not self.coeffs:
            raise DivisionByZero("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one()

    def coefficient(self, i: int):
        return self.coeffs[i] if i < len(self.coeffs) else self.field.zero()

    def padded(self, length: int) -> tuple:
        """Coefficients zero-padded up to the given length."""
        pad = (self.field.zero(),) * (length - len(self.coeffs))
        return self.coeffs + pad

    def _check_same_field(self, other: "Polynomial"):
        if self.field != other.field:
            raise FieldMismatch(f"polynomials over {self.field} and {other.field}")

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_field(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(self.field, out)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._check_same_field(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial.zero(self.field)
        zero = self.field.zero()
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.field, out)

    def scale(self, k) -> "Polynomial":
        k = self.field.coerce(k)
        return Polynomial(self.field, [c * k for c in self.coeffs])

    def __divmod__(self, other):
        return poly_divmod(self, other)

    def __floordiv__(self, other):
        return poly_divmod(self, other)[0]

    def __mod__(self, other):
        return poly_divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        if lead == self.field.one():
            return self
        return Polynomial(self.field, [c / lead for c in self.coeffs])

    def evaluate(self, point):
        """Horner evaluation; the point may live in any extension of the field."""
        if not self.coeffs:
            return point * 0 if not isinstance(point, int) else 0
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * point + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Polynomial({self.field!r}, {list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*X" if c != self.field.one() else "X")
            else:
                parts.append(f"{c}*X^{i}" if c != self.field.one() else f"X^{i}")
        return " + ".join(parts)


def poly_divmod(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder with deg r < deg b."""
    if not isinstance(a, Polynomial) or not isinstance(b, Polynomial):
        raise TypeError("poly_divmod expects two polynomials")
    a._check_same_field(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    field = a.field
    if a.degree < b.degree:
        return Polynomial.zero(field), a
    rem = list(a.coeffs)
    quo = [field.zero()] * (a.degree - b.degree + 1)
    inv_lead = field.one() / b.leading
    for k in range(a.degree - b.degree, -1, -1):
        c = rem[k + b.degree] * inv_lead
        quo[k] = c
        if c:
            for j, bj in enumerate(b.coeffs):
                rem[k + j] = rem[k + j] - c * bj
    return Polynomial(field, quo), Polynomial(field, rem[: b.degree])


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd."""
    a._check_same_field(b)
    while b:
        a, b = b, a % b
    return a.monic()


def poly_gcd_extended(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Monic g plus Bezout cofactors: g = u*a + v*b."""
    a._check_same_field(b)
    field = a.field
    if not a and not b:
        raise DivisionByZero("gcd(0, 0) is undefined")
    r0, r1 = a, b
    u0, u1 = Polynomial.one(field), Polynomial.zero(field)
    v0, v1 = Polynomial.zero(field), Polynomial.one(field)
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    lead = r0.leading
    if lead != field.one():
        inv = field.one() / lead
        r0, u0, v0 = r0.scale(inv), u0.scale(inv), v0.scale(inv)
    return r0, u0, v0


def poly_lcm(a: Polynomial, b: Polynomial) -> Polynomial:
    if not a or not b:
        return Polynomial.zero(a.field)
    return ((a * b) // poly_gcd(a, b)).monic()


def poly_pow_mod(base: Polynomial, e: int, modulus: Polynomial) -> Polynomial:
    """base^e reduced mod a monic modulus, by square-and-multiply."""
    if modulus.degree < 1 or not modulus.is_monic():
        raise NotMonic(f"modulus must be monic of degree >= 1, got {modulus}")
    if e < 0:
        raise ValueError("negative exponent")
    result = Polynomial.one(base.field) % modulus
    base = base % modulus
    while e:
        if e & 1:
            result = (result * base) % modulus
        base = (base * base) % modulus
        e >>= 1
    return result


@functools.cache
def _cyclotomic_int_coeffs(n: int) -> tuple[int, ...]:
    # Recursive exact division over QQ: (X^n - 1) / prod of lower cyclotomics.
    # The result always has integer coefficients; cached field-independently.
    rationals = RationalField()
    num = Polynomial.x_pow_minus_const(rationals, n, 1)
    den = Polynomial.one(rationals)
    for d in range(1, n):
        if n % d == 0:
            den = den * Polynomial(rationals, [c for c in _cyclotomic_int_coeffs(d)])
    quo, rem = poly_divmod(num, den)
    assert not rem, f"cyclotomic recursion left a remainder at n={n}"
    assert all(c.denominator == 1 for c in quo.coeffs)
    return tuple(int(c) for c in quo.coeffs)


def cyclotomic_polynomial(n: int, field) -> Polynomial:
    """The n-th cyclotomic polynomial with coefficients mapped into the field."""
    if n < 1:
        raise ValueError("cyclotomic index must be >= 1")
    char = field.characteristic()
    if char and n % char == 0:
        raise CharacteristicDividesN(f"characteristic {char} divides {n}")
    return Polynomial(field, [field.from_int(c) for c in _cyclotomic_int_coeffs(n)])


def is_irreducible_mod_p(f: Polynomial) -> bool:
    """Rabin irreducibility test over a prime field.

    f of degree d is irreducible iff X^(p^d) = X mod f and, for every prime
    q dividing d, gcd(X^(p^(d/q)) - X, f) = 1.
    """
    if not isinstance(f.field, PrimeField):
        raise FieldMismatch(f"irreducibility test needs a prime field, got {f.field}")
    d = f.degree
    if d < 1:
        return False
    if not f.is_monic():
        raise NotMonic(f"irreducibility test needs a monic polynomial, got {f}")
    p = f.field.p
    x = Polynomial.x(f.field)
    for q in prime_factors(d):
        h = poly_pow_mod(x, p ** (d // q), f) - (x % f)
        if poly_gcd(h, f).degree != 0:
            return False
    return poly_pow_mod(x, p ** d, f) == x % f

"""Constructors for ready-made cyclic-extension instances.

The Frobenius family F_(p^n)/F_p supplies unlimited finite-field cases (the
Galois group is cyclic, generated by a -> a^p, and n | p-1 puts the needed
root of unity in F_p). One hard-coded characteristic-0 instance exercises
the nested tower: the degree-3 extension K[X]/(X^3 - 3X + 1) of
K = QQ[t]/(t^2 + t + 1), whose generating automorphism sends the generator
alpha to alpha^2 - 2. Everything a constructor asserts about itself is
re-verified at construction time (and again by validate_setup downstream).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from pathlib import Path

from .errors import KummerError, NoPrimitiveRoot, ValidationError
from .kummer import CyclicExtensionInput
from .polynomials import Polynomial, is_irreducible_mod_p, poly_pow_mod
from .scalars import PrimeField, RationalField, find_nth_root_of_unity
from .tower import ExtensionField
from . import serialize


def default_modulus(field: PrimeField, n: int) -> Polynomial:
    """First monic irreducible of degree n, in lexicographic order of the
    coefficient tuple (c_0, ..., c_{n-1}).

    Tuples with c_0 = 0 are skipped for n >= 2: they all have the root 0, so
    the lex-first irreducible never lies among them.
    """
    p = field.p
    start = 0 if n == 1 else 1
    for c0 in range(start, p):
        for rest in itertools.product(range(p), repeat=n - 1):
            candidate = Polynomial(field, (c0,) + rest + (1,))
            if is_irreducible_mod_p(candidate):
                return candidate
    raise AssertionError(f"no irreducible of degree {n} over F_{p}")  # cannot happen


def frobenius_family(p: int, n: int, modulus: Polynomial | None = None) -> CyclicExtensionInput:
    """F_(p^n) over F_p with the Frobenius automorphism a -> a^p.

    Requires n | p-1 so that F_p already contains a primitive n-th root of
    unity. The extension modulus defaults to the lex-first irreducible.
    """
    base = PrimeField(p)
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if (p - 1) % n != 0:
        raise NoPrimitiveRoot(f"F_{p} has no primitive {n}th root of unity: {n} does not divide {p - 1}")
    zeta = find_nth_root_of_unity(p, n)
    if modulus is None:
        modulus = default_modulus(base, n)
    else:
        if modulus.field != base:
            raise ValidationError(f"modulus must be over {base}")
        if modulus.degree != n or not modulus.is_monic():
            raise ValidationError(f"modulus must be monic of degree {n}, got {modulus}")
    ext = ExtensionField(base, modulus)  # raises ReducibleModulus on a bad supplied modulus
    frob = poly_pow_mod(Polynomial.x(base), p, modulus)
    sigma_image = ext.element(frob.coeffs)
    return CyclicExtensionInput(ext, n, zeta, sigma_image)


def builtin_cubic_over_eisenstein() -> CyclicExtensionInput:
    """The cyclic cubic K[X]/(X^3 - 3X + 1) over K = QQ[t]/(t^2 + t + 1).

    K contains the primitive cube root of unity t; the automorphism sends
    alpha to alpha^2 - 2 and has order 3. The defining identity
    f(alpha^2 - 2) = 0 is recomputed here rather than trusted.
    """
    rationals = RationalField()
    k_field = ExtensionField(rationals, Polynomial(rationals, [1, 1, 1]))
    zeta = k_field.gen()
    ext = ExtensionField(k_field, Polynomial(k_field, [1, -3, 0, 1]))
    alpha = ext.gen()
    sigma_image = alpha * alpha - 2
    if ext.modulus.evaluate(sigma_image) != ext.zero():
        raise KummerError("builtin cubic is broken: f(alpha^2 - 2) != 0")
    return CyclicExtensionInput(ext, 3, zeta, sigma_image)


def parse_tower_spec(document: str) -> CyclicExtensionInput:
    """Build an input from a tower-spec JSON document (see serialize)."""
    return serialize.input_from_json(serialize.loads(document))


@dataclass(frozen=True)
class FamilyDescriptor:
    """Which instance family to build, plus its parameters."""

    kind: str  # "frobenius" | "builtin-cubic" | "custom"
    p: int | None = None
    n: int | None = None
    path: str | Path | None = None

    def build(self) -> CyclicExtensionInput:
        if self.kind == "frobenius":
            if self.p is None or self.n is None:
                raise ValidationError("frobenius family needs p and n")
            return frobenius_family(self.p, self.n)
        if self.kind == "builtin-cubic":
            return builtin_cubic_over_eisenstein()
        if self.kind == "custom":
            if self.path is None:
                raise ValidationError("custom family needs a spec file path")
            return parse_tower_spec(Path(self.path).read_text())
        raise ValidationError(f"unknown family kind {self.kind!r}")

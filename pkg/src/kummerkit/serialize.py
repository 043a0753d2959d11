"""Canonical JSON for field specs, elements, inputs and certificates.

Conventions (normative for every file this package reads or writes):

* scalars are decimal strings, never JSON numbers: rationals as "num/den"
  with the denominator omitted when it is 1, prime-field values as their
  canonical representative in [0, p);
* an element of a ground field (prime or rationals) is a scalar string; an
  element of an extension is the array of its coordinates over the base,
  degree-ascending, recursively;
* polynomials are arrays of element encodings, degree-ascending;
* structural integers (n, eigenvalue exponents, dimensions) are JSON
  integers -- they are small counts, not field scalars;
* emitted documents have a fixed key order, so identical values serialize
  to identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import (
    MalformedCertificate,
    NotMonic,
    ParseError,
    SchemaViolation,
    TowerTooTall,
    ValidationError,
    ZeroDenominator,
)
from .kummer import (
    CERTIFICATE_VERSION,
    CHECK_NAMES,
    CyclicExtensionInput,
    EigenEntry,
    EigenReport,
    KummerCertificate,
)
from .polynomials import Polynomial
from .scalars import PrimeField, PrimeFieldElement, RationalField, rational
from .tower import ExtensionField


def canonical_dumps(obj) -> str:
    """Deterministic JSON text: fixed key order, 2-space indent, newline end."""
    return json.dumps(obj, indent=2, ensure_ascii=True) + "\n"


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


# -- elements --------------------------------------------------------------

def element_to_json(field, elem):
    if isinstance(field, (PrimeField, RationalField)):
        return str(field.coerce(elem))
    return [element_to_json(field.base, c) for c in field.coerce(elem).coords]


def element_from_json(field, obj):
    if isinstance(field, PrimeField):
        return PrimeFieldElement(_int_from_json(obj, "prime-field element"), field.p)
    if isinstance(field, RationalField):
        return _rational_from_json(obj)
    if not isinstance(obj, list):
        raise SchemaViolation(f"element of {field} must be a coordinate array, got {obj!r}")
    if len(obj) > field.degree:
        raise SchemaViolation(f"{len(obj)} coordinates for a degree-{field.degree} extension")
    return field.element([element_from_json(field.base, c) for c in obj])


def _int_from_json(obj, what: str) -> int:
    if isinstance(obj, bool):
        raise SchemaViolation(f"{what} must be an integer string, got {obj!r}")
    if isinstance(obj, int):
        return obj
    if isinstance(obj, str):
        try:
            return int(obj, 10)
        except ValueError as exc:
            raise SchemaViolation(f"{what} is not a decimal integer: {obj!r}") from exc
    raise SchemaViolation(f"{what} must be a decimal string, got {obj!r}")


def _rational_from_json(obj) -> Fraction:
    if isinstance(obj, int) and not isinstance(obj, bool):
        return Fraction(obj)
    if not isinstance(obj, str):
        raise SchemaViolation(f"rational must be a string like 'num/den', got {obj!r}")
    num, _, den = obj.partition("/")
    try:
        if den:
            return rational(int(num, 10), int(den, 10))
        return Fraction(int(num, 10))
    except (ValueError, ZeroDenominator) as exc:
        raise SchemaViolation(f"invalid rational {obj!r}") from exc


# -- polynomials -----------------------------------------------------------

def poly_to_json(poly: Polynomial) -> list:
    return [element_to_json(poly.field, c) for c in poly.coeffs]


def poly_from_json(field, obj) -> Polynomial:
    if not isinstance(obj, list):
        raise SchemaViolation(f"polynomial must be an array of coefficients, got {obj!r}")
    return Polynomial(field, [element_from_json(field, c) for c in obj])


# -- field specs -------------------------------------------------------------

def field_to_json(field) -> dict:
    if isinstance(field, PrimeField):
        return {"kind": "prime", "p": str(field.p)}
    if isinstance(field, RationalField):
        return {"kind": "rationals"}
    if isinstance(field, ExtensionField):
        return {
            "kind": "extension",
            "base": field_to_json(field.base),
            "modulus": poly_to_json(field.modulus),
        }
    raise SchemaViolation(f"unknown field {field!r}")


def field_from_json(obj):
    if not isinstance(obj, dict):
        raise SchemaViolation(f"field spec must be an object, got {obj!r}")
    kind = obj.get("kind")
    if kind == "prime":
        if "p" not in obj:
            raise SchemaViolation("prime field spec needs 'p'")
        return PrimeField(_int_from_json(obj["p"], "field characteristic"))
    if kind == "rationals":
        return RationalField()
    if kind == "extension":
        if "base" not in obj or "modulus" not in obj:
            raise SchemaViolation("extension field spec needs 'base' and 'modulus'")
        base = field_from_json(obj["base"])
        modulus = poly_from_json(base, obj["modulus"])
        return _build_extension(base, modulus)
    raise SchemaViolation(f"unknown field kind {kind!r}")


def _build_extension(base, modulus) -> ExtensionField:
    # structural defects in a document are schema violations, not arithmetic
    # errors; ReducibleModulus stays a validation rejection
    try:
        return ExtensionField(base, modulus)
    except (NotMonic, TowerTooTall, ValueError) as exc:
        raise SchemaViolation(str(exc)) from exc


# -- tower-spec documents ----------------------------------------------------

INPUT_KEYS = ("base", "n", "zeta", "modulus", "sigma_image")


def input_to_json(inp: CyclicExtensionInput) -> dict:
    base = inp.base_field
    return {
        "base": field_to_json(base),
        "n": inp.n,
        "zeta": element_to_json(base, inp.zeta),
        "modulus": poly_to_json(inp.modulus),
        "sigma_image": element_to_json(inp.ext_field, inp.sigma_image),
    }


def input_from_json(obj) -> CyclicExtensionInput:
    if not isinstance(obj, dict):
        raise SchemaViolation(f"tower spec must be an object, got {obj!r}")
    missing = [k for k in INPUT_KEYS if k not in obj]
    if missing:
        raise SchemaViolation(f"tower spec is missing keys: {', '.join(missing)}")
    base = field_from_json(obj["base"])
    modulus = poly_from_json(base, obj["modulus"])
    ext = _build_extension(base, modulus)
    n = _int_from_json(obj["n"], "n")
    zeta = element_from_json(base, obj["zeta"])
    sigma_image = element_from_json(ext, obj["sigma_image"])
    return CyclicExtensionInput(ext, n, zeta, sigma_image)


# -- certificates -------------------------------------------------------------

def certificate_to_json(cert: KummerCertificate) -> dict:
    base = cert.input.base_field
    ext = cert.input.ext_field
    return {
        "input": input_to_json(cert.input),
        "eigen": [
            {"i": e.i, "eigenvalue": element_to_json(base, e.eigenvalue), "dimension": e.dimension}
            for e in cert.eigen.entries
        ],
        "x": element_to_json(ext, cert.x),
        "c": element_to_json(base, cert.c),
        "x_min_poly": poly_to_json(cert.x_min_poly),
        "checks": {name: bool(cert.checks[name]) for name in CHECK_NAMES},
        "version": CERTIFICATE_VERSION,
    }


def certificate_from_json(obj) -> KummerCertificate:
    try:
        if not isinstance(obj, dict):
            raise MalformedCertificate("certificate must be a JSON object")
        for key in ("input", "eigen", "x", "c", "x_min_poly", "checks", "version"):
            if key not in obj:
                raise MalformedCertificate(f"certificate is missing '{key}'")
        if obj["version"] != CERTIFICATE_VERSION:
            raise MalformedCertificate(f"unsupported certificate version {obj['version']!r}")
        inp = input_from_json(obj["input"])
        base, ext = inp.base_field, inp.ext_field
        entries = []
        if not isinstance(obj["eigen"], list):
            raise MalformedCertificate("'eigen' must be an array")
        for entry in obj["eigen"]:
            entries.append(
                EigenEntry(
                    i=_int_from_json(entry["i"], "eigenvalue exponent"),
                    eigenvalue=element_from_json(base, entry["eigenvalue"]),
                    dimension=_int_from_json(entry["dimension"], "eigenspace dimension"),
                )
            )
        checks = obj["checks"]
        if not isinstance(checks, dict) or set(checks) != set(CHECK_NAMES):
            raise MalformedCertificate("'checks' must contain exactly the documented flags")
        if not all(isinstance(v, bool) for v in checks.values()):
            raise MalformedCertificate("check flags must be booleans")
        return KummerCertificate(
            input=inp,
            eigen=EigenReport(tuple(entries), None),
            x=element_from_json(ext, obj["x"]),
            c=element_from_json(base, obj["c"]),
            x_min_poly=poly_from_json(base, obj["x_min_poly"]),
            checks={name: checks[name] for name in CHECK_NAMES},
        )
    except MalformedCertificate:
        raise
    except (SchemaViolation, ValidationError, KeyError, TypeError) as exc:
        raise MalformedCertificate(f"certificate does not match the schema: {exc}") from exc

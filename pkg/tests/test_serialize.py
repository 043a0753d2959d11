"""Wire-format tests: canonical scalar strings, nested coordinate arrays,
fixed key order, byte-level determinism, and schema rejection paths."""

import json
from fractions import Fraction

import pytest

from kummerkit import serialize
from kummerkit.errors import MalformedCertificate, NotPrime, ParseError, ReducibleModulus, SchemaViolation
from kummerkit.families import builtin_cubic_over_eisenstein, frobenius_family
from kummerkit.kummer import CHECK_NAMES, certify
from kummerkit.polynomials import Polynomial
from kummerkit.scalars import PrimeField, PrimeFieldElement, RationalField
from kummerkit.tower import ExtensionField

F13 = PrimeField(13)
QQ = RationalField()


class TestScalars:
    def test_prime_elements_are_decimal_strings(self):
        assert serialize.element_to_json(F13, PrimeFieldElement(11, 13)) == "11"
        assert serialize.element_from_json(F13, "-2") == PrimeFieldElement(11, 13)

    def test_rationals_canonical(self):
        assert serialize.element_to_json(QQ, Fraction(-6, 8)) == "-3/4"
        assert serialize.element_to_json(QQ, Fraction(5)) == "5"
        assert serialize.element_from_json(QQ, "3/4") == Fraction(3, 4)

    def test_rational_rejects_garbage(self):
        with pytest.raises(SchemaViolation):
            serialize.element_from_json(QQ, "3/0")
        with pytest.raises(SchemaViolation):
            serialize.element_from_json(QQ, "a/b")
        with pytest.raises(SchemaViolation):
            serialize.element_from_json(QQ, 1.5)


class TestElements:
    def test_extension_elements_are_arrays(self):
        ext = ExtensionField(F13, Polynomial(F13, [-2, 0, 0, 0, 1]))
        e = ext.element([1, 0, 7])
        assert serialize.element_to_json(ext, e) == ["1", "0", "7", "0"]
        assert serialize.element_from_json(ext, ["1", "0", "7"]) == e

    def test_nested_arrays_for_nested_towers(self):
        inp = builtin_cubic_over_eisenstein()
        zeta_json = serialize.element_to_json(inp.base_field, inp.zeta)
        assert zeta_json == ["0", "1"]
        sigma_json = serialize.element_to_json(inp.ext_field, inp.sigma_image)
        assert sigma_json == [["-2", "0"], ["0", "0"], ["1", "0"]]

    def test_too_many_coordinates(self):
        ext = ExtensionField(F13, Polynomial(F13, [-2, 0, 0, 0, 1]))
        with pytest.raises(SchemaViolation):
            serialize.element_from_json(ext, ["1"] * 5)


class TestFieldSpecs:
    def test_prime_round_trip(self):
        obj = serialize.field_to_json(F13)
        assert obj == {"kind": "prime", "p": "13"}
        assert serialize.field_from_json(obj) == F13

    def test_extension_round_trip(self):
        ext = ExtensionField(F13, Polynomial(F13, [-2, 0, 0, 0, 1]))
        obj = serialize.field_to_json(ext)
        assert obj["kind"] == "extension"
        assert obj["modulus"] == ["11", "0", "0", "0", "1"]
        assert serialize.field_from_json(obj) == ext

    def test_nonprime_p_rejected_as_validation(self):
        with pytest.raises(NotPrime):
            serialize.field_from_json({"kind": "prime", "p": "4"})

    def test_reducible_modulus_rejected_as_validation(self):
        obj = {"kind": "extension", "base": {"kind": "prime", "p": "5"}, "modulus": ["4", "0", "1"]}
        with pytest.raises(ReducibleModulus):
            serialize.field_from_json(obj)

    def test_unknown_kind(self):
        with pytest.raises(SchemaViolation):
            serialize.field_from_json({"kind": "padics"})


class TestCertificates:
    def test_key_order_is_documented_order(self):
        cert = certify(frobenius_family(13, 4))
        obj = serialize.certificate_to_json(cert)
        assert list(obj) == ["input", "eigen", "x", "c", "x_min_poly", "checks", "version"]
        assert list(obj["input"]) == ["base", "n", "zeta", "modulus", "sigma_image"]
        assert list(obj["checks"]) == list(CHECK_NAMES)

    def test_round_trip(self):
        cert = certify(frobenius_family(13, 4, Polynomial(F13, [-2, 0, 0, 0, 1])))
        text = serialize.canonical_dumps(serialize.certificate_to_json(cert))
        parsed = serialize.certificate_from_json(serialize.loads(text))
        assert serialize.canonical_dumps(serialize.certificate_to_json(parsed)) == text
        assert parsed.x == cert.x
        assert parsed.c == cert.c
        assert parsed.checks == cert.checks

    def test_round_trip_nested(self):
        cert = certify(builtin_cubic_over_eisenstein())
        text = serialize.canonical_dumps(serialize.certificate_to_json(cert))
        parsed = serialize.certificate_from_json(serialize.loads(text))
        assert serialize.canonical_dumps(serialize.certificate_to_json(parsed)) == text

    def test_byte_determinism(self):
        one = serialize.canonical_dumps(serialize.certificate_to_json(certify(frobenius_family(13, 4))))
        two = serialize.canonical_dumps(serialize.certificate_to_json(certify(frobenius_family(13, 4))))
        assert one.encode() == two.encode()

    def test_missing_field(self):
        obj = serialize.certificate_to_json(certify(frobenius_family(5, 2)))
        del obj["checks"]
        with pytest.raises(MalformedCertificate):
            serialize.certificate_from_json(obj)

    def test_unknown_version(self):
        obj = serialize.certificate_to_json(certify(frobenius_family(5, 2)))
        obj["version"] = "99"
        with pytest.raises(MalformedCertificate):
            serialize.certificate_from_json(obj)

    def test_extra_flag(self):
        obj = serialize.certificate_to_json(certify(frobenius_family(5, 2)))
        obj["checks"]["extra"] = True
        with pytest.raises(MalformedCertificate):
            serialize.certificate_from_json(obj)

    def test_non_boolean_flag(self):
        obj = serialize.certificate_to_json(certify(frobenius_family(5, 2)))
        obj["checks"]["c_in_base"] = "yes"
        with pytest.raises(MalformedCertificate):
            serialize.certificate_from_json(obj)


class TestJsonText:
    def test_parse_error_has_location(self):
        with pytest.raises(ParseError) as err:
            serialize.loads("{not json")
        assert "line 1" in str(err.value)

    def test_no_floats_anywhere(self):
        cert = certify(frobenius_family(13, 4))
        obj = serialize.certificate_to_json(cert)

        def walk(node):
            assert not isinstance(node, float)
            if isinstance(node, dict):
                for v in node.values():
                    walk(v)
            elif isinstance(node, list):
                for v in node:
                    walk(v)

        walk(obj)
        assert json.loads(serialize.canonical_dumps(obj)) == obj

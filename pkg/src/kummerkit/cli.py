"""Command-line surface: build instances, run the pipeline, verify
certificates, run sweeps.

Exit codes: 0 valid, 1 hypothesis/validation rejection, 2 property failure
(invalid certificate or internal invariant breach), 3 parse/IO/flag errors.
JSON output is canonical and contains no timing, so identical inputs yield
byte-identical bytes; timings appear in the text format only.
"""

from __future__ import annotations

import argparse
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import serialize
from .errors import InputFormatError, KummerError, ParseError, ValidationError
from .families import builtin_cubic_over_eisenstein, frobenius_family, parse_tower_spec
from .kummer import KummerCertificate, compute_certificate, validate_setup, verify_certificate, verify_certificate_report
from .polynomials import Polynomial
from .scalars import PrimeField, is_prime


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="kummerkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    finite = sub.add_parser("finite", help="certify F_(p^n)/F_p with the Frobenius automorphism")
    finite.add_argument("--p", type=int, required=True, help="prime characteristic")
    finite.add_argument("--n", type=int, required=True, help="extension degree (must divide p-1)")
    finite.add_argument("--modulus", help="comma-separated coefficients, degree-ascending (default: lex-first irreducible)")
    _common_flags(finite)

    tower = sub.add_parser("tower", help="certify an instance described by a tower-spec JSON file")
    tower.add_argument("spec", help="path to the tower-spec document, or 'builtin-cubic'")
    _common_flags(tower)

    verify = sub.add_parser("verify", help="re-derive every property of a certificate file")
    verify.add_argument("certificate", help="path to a certificate JSON file")
    _common_flags(verify)

    selftest = sub.add_parser("selftest", help="sweep all (p, n) with p prime <= max-p and n | p-1, n <= max-n")
    selftest.add_argument("--max-p", type=int, required=True)
    selftest.add_argument("--max-n", type=int, default=8)
    selftest.add_argument("--jobs", type=int, default=1, help="worker processes (results are merged in (p, n) order)")
    _common_flags(selftest)
    return parser


def _common_flags(cmd: argparse.ArgumentParser):
    cmd.add_argument("--format", choices=("text", "json"), default="text")
    cmd.add_argument("--out", help="write the report here instead of stdout")


def _write(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _emit_error(exc: KummerError, fmt: str, out: str | None):
    code = type(exc).__name__
    if fmt == "json":
        _write(serialize.canonical_dumps({"outcome": "error", "error": {"code": code, "message": str(exc)}}), out)
    else:
        _write(f"error: {code}: {exc}\n", out)


def _format_certificate_text(cert: KummerCertificate, timings: dict[str, int]) -> str:
    lines = [
        f"K: {cert.input.base_field}",
        f"E: {cert.input.ext_field}",
        f"n: {cert.input.n}",
        f"zeta: {cert.input.zeta}",
        f"sigma_image: {cert.input.sigma_image}",
    ]
    if cert.eigen.sigma_min_poly is not None:
        lines.append(f"sigma_min_poly: {cert.eigen.sigma_min_poly}")
    lines.append("eigen:")
    for e in cert.eigen.entries:
        lines.append(f"  i={e.i} eigenvalue={e.eigenvalue} dimension={e.dimension}")
    lines += [
        f"x: {cert.x}",
        f"c: {cert.c}",
        f"x_min_poly: {cert.x_min_poly}",
        "checks:",
    ]
    for name, value in cert.checks.items():
        lines.append(f"  {name}: {'true' if value else 'false'}")
    lines.append(f"outcome: {'valid' if cert.is_valid() else 'invalid'}")
    lines.append("timings_ms: " + " ".join(f"{k}={v}" for k, v in timings.items()))
    return "\n".join(lines) + "\n"


def _run_pipeline(build_input, fmt: str, out: str | None) -> int:
    timings: dict[str, int] = {}
    try:
        t0 = time.perf_counter_ns()
        inp = build_input()
        t1 = time.perf_counter_ns()
        ctx = validate_setup(inp)
        t2 = time.perf_counter_ns()
        cert = compute_certificate(ctx)
        t3 = time.perf_counter_ns()
    except InputFormatError as exc:
        _emit_error(exc, fmt, out)
        return 3
    except ValidationError as exc:
        _emit_error(exc, fmt, out)
        return 1
    except KummerError as exc:
        _emit_error(exc, fmt, out)
        return 2
    timings.update(
        build=(t1 - t0) // 1_000_000,
        validate=(t2 - t1) // 1_000_000,
        certificate=(t3 - t2) // 1_000_000,
    )
    if fmt == "json":
        _write(serialize.canonical_dumps(serialize.certificate_to_json(cert)), out)
    else:
        _write(_format_certificate_text(cert, timings), out)
    return 0 if cert.is_valid() else 2


def cmd_finite(args) -> int:
    def build():
        base = PrimeField(args.p)
        modulus = None
        if args.modulus is not None:
            try:
                coeffs = [int(part.strip()) for part in args.modulus.split(",")]
            except ValueError as exc:
                raise ParseError(f"--modulus must be comma-separated integers, got {args.modulus!r}") from exc
            modulus = Polynomial(base, coeffs)
        return frobenius_family(args.p, args.n, modulus)

    return _run_pipeline(build, args.format, args.out)


def cmd_tower(args) -> int:
    def build():
        if args.spec == "builtin-cubic":
            return builtin_cubic_over_eisenstein()
        try:
            document = Path(args.spec).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read {args.spec}: {exc}") from exc
        return parse_tower_spec(document)

    return _run_pipeline(build, args.format, args.out)


def cmd_verify(args) -> int:
    try:
        text = Path(args.certificate).read_text()
        cert = serialize.certificate_from_json(serialize.loads(text))
        ok, failures = verify_certificate_report(cert)
    except OSError as exc:
        _write(f"error: cannot read {args.certificate}: {exc}\n", args.out)
        return 3
    except InputFormatError as exc:
        if args.format == "json":
            _emit_error(exc, "json", args.out)
        else:
            _write(f"error: {type(exc).__name__}: {exc}\n", args.out)
        return 3
    if args.format == "json":
        payload = {"outcome": "valid" if ok else "invalid", "failures": failures}
        _write(serialize.canonical_dumps(payload), args.out)
    elif ok:
        _write("certificate valid: every property re-derived\n", args.out)
    else:
        _write(f"certificate invalid: failed property: {failures[0]}\n", args.out)
    return 0 if ok else 2


def _selftest_case(pair: tuple[int, int]) -> tuple[int, int, bool, str]:
    p, n = pair
    try:
        cert = compute_certificate(validate_setup(frobenius_family(p, n)))
        if not cert.is_valid():
            bad = [name for name, v in cert.checks.items() if not v]
            return p, n, False, "false flags: " + ",".join(bad)
        if not verify_certificate(cert):
            return p, n, False, "verification failed"
        return p, n, True, ""
    except KummerError as exc:
        return p, n, False, f"{type(exc).__name__}: {exc}"


def cmd_selftest(args) -> int:
    if args.max_p < 3:
        sys.stderr.write("selftest needs --max-p >= 3\n")
        return 1
    pairs = [
        (p, n)
        for p in range(2, args.max_p + 1)
        if is_prime(p)
        for n in range(1, args.max_n + 1)
        if (p - 1) % n == 0
    ]
    pairs.sort()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_selftest_case, pairs))
    else:
        results = [_selftest_case(pair) for pair in pairs]
    results.sort(key=lambda r: (r[0], r[1]))
    passed = sum(1 for _, _, ok, _ in results if ok)
    if args.format == "json":
        payload = {
            "cases": [{"p": p, "n": n, "ok": ok, "detail": detail} for p, n, ok, detail in results],
            "passed": passed,
            "total": len(results),
        }
        _write(serialize.canonical_dumps(payload), args.out)
    else:
        lines = [f"p={p} n={n} {'ok' if ok else 'FAIL ' + detail}" for p, n, ok, detail in results]
        lines.append(f"passed {passed}/{len(results)} cases")
        _write("\n".join(lines) + "\n", args.out)
    return 0 if passed == len(results) else 2


def _merge_value_flags(argv: list[str]) -> list[str]:
    # let --modulus take values that begin with "-" (negative coefficients)
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--modulus":
            val = next(it, None)
            out.append(tok if val is None else f"--modulus={val}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _merge_value_flags(list(argv))
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 3
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    handlers = {
        "finite": cmd_finite,
        "tower": cmd_tower,
        "verify": cmd_verify,
        "selftest": cmd_selftest,
    }
    return handlers[args.command](args)


def entrypoint():
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""The certificate engine for cyclic extensions with enough roots of unity.

Given a degree-n extension E = K[X]/(f), a primitive n-th root of unity zeta
in K, and a generating automorphism presented as the image s of the class of
X, this module checks every hypothesis, diagonalizes the automorphism as a
K-linear operator, extracts a canonical radical generator x with
sigma(x) = zeta*x, and assembles a certificate witnessing that x^n lies in K
and that x alone generates E over K. Every step of that argument is a
separately checkable operation, and the certificate records the outcome of
each as a named flag; an input that smuggled in a broken hypothesis (say a
reducible modulus over QQ) shows up as a false flag, not a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field

from .errors import (
    AutomorphismOrderMismatch,
    CharacteristicDividesN,
    EmptyEigenspace,
    FieldMismatch,
    MalformedCertificate,
    NoPrimitiveRoot,
    NotAnAutomorphism,
    ValidationError,
)
from .linalg import Matrix, element_min_poly, nullspace, operator_matrix, operator_min_poly
from .polynomials import Polynomial, poly_divmod
from .scalars import prime_factors
from .tower import ExtensionElement, ExtensionField

CHECK_NAMES = (
    "hypotheses_ok",
    "sigma_is_automorphism",
    "sigma_order_n",
    "fixed_field_is_K",
    "min_poly_divides_Xn_minus_1",
    "spectrum_complete",
    "c_in_base",
    "x_min_poly_degree_n",
    "root_orbit_transitive",
    "binomial_factorization",
)

CERTIFICATE_VERSION = "1"


@dataclass(frozen=True)
class CyclicExtensionInput:
    """A cyclic extension instance: E over K = E.base, with zeta in K and the
    automorphism given by the image of the extension generator."""

    ext_field: ExtensionField
    n: int
    zeta: object
    sigma_image: ExtensionElement

    @property
    def base_field(self):
        return self.ext_field.base

    @property
    def modulus(self) -> Polynomial:
        return self.ext_field.modulus


@dataclass(frozen=True)
class ValidatedContext:
    """Input that passed validate_setup, plus the power tables both the
    matrix construction and the direct tower arithmetic route share."""

    input: CyclicExtensionInput
    sigma_powers: tuple  # s^0, ..., s^(n-1) in E
    zeta_powers: tuple  # zeta^0, ..., zeta^(n-1) in K

    @property
    def ext_field(self) -> ExtensionField:
        return self.input.ext_field

    @property
    def base_field(self):
        return self.input.base_field

    @property
    def n(self) -> int:
        return self.input.n

    @property
    def zeta(self):
        return self.input.zeta

    def sigma(self, e: ExtensionElement) -> ExtensionElement:
        """Apply the automorphism by direct tower arithmetic: the image of
        sum(c_i * alpha^i) is sum(c_i * s^i)."""
        e = self.ext_field.coerce(e)
        acc = self.ext_field.zero()
        for c, s_pow in zip(e.coords, self.sigma_powers):
            if c:
                acc = acc + s_pow * c
        return acc

    def zeta_pow(self, i: int):
        """zeta^i in K, for any integer i (zeta has order n)."""
        return self.zeta_powers[i % self.n]

    def zeta_pow_ext(self, i: int) -> ExtensionElement:
        """zeta^i embedded into E."""
        return self.ext_field.embed(self.zeta_pow(i))


@dataclass
class EigenEntry:
    i: int
    eigenvalue: object
    dimension: int
    eigenvector: ExtensionElement | None = None


@dataclass
class EigenReport:
    entries: tuple
    sigma_min_poly: Polynomial | None = None

    @property
    def m(self) -> int:
        return len(self.entries)

    def eigenvalues(self) -> list:
        return [e.eigenvalue for e in self.entries]


@dataclass
class KummerCertificate:
    """The radical-generator witness plus one boolean flag per checked property.

    A certificate is valid iff every flag is true. x is canonically scaled:
    its lowest-index nonzero coordinate is 1.
    """

    input: CyclicExtensionInput
    eigen: EigenReport
    x: ExtensionElement
    c: object
    x_min_poly: Polynomial
    checks: dict = dataclass_field(default_factory=dict)

    def is_valid(self) -> bool:
        return all(self.checks.get(name, False) for name in CHECK_NAMES)


def validate_setup(inp: CyclicExtensionInput) -> ValidatedContext:
    """Check every hypothesis; raise a ValidationError subclass on failure.

    Checks, in order: structural consistency, characteristic does not divide
    n, zeta has exact order n, the asserted image s of the generator is a
    root of the modulus (so alpha -> s extends to a K-endomorphism of E,
    automatically a K-automorphism), and that automorphism has order
    exactly n.
    """
    if not isinstance(inp.ext_field, ExtensionField):
        raise ValidationError("E must be an extension field")
    ext = inp.ext_field
    base = ext.base
    n = inp.n
    if n < 1:
        raise ValidationError(f"n must be >= 1, got {n}")
    if ext.degree != n:
        raise ValidationError(f"modulus degree {ext.degree} does not match n = {n}")

    char = base.characteristic()
    if char and n % char == 0:
        raise CharacteristicDividesN(f"characteristic {char} divides n = {n}")

    try:
        zeta = base.coerce(inp.zeta)
        sigma_image = ext.coerce(inp.sigma_image)
    except FieldMismatch as exc:
        raise ValidationError(str(exc)) from exc

    if not zeta:
        raise NoPrimitiveRoot("zeta = 0 is not a root of unity")
    zeta_powers = [base.one()]
    for _ in range(n - 1):
        zeta_powers.append(zeta_powers[-1] * zeta)
    if zeta_powers[-1] * zeta != base.one():
        raise NoPrimitiveRoot(f"zeta^{n} != 1")
    for q in prime_factors(n):
        if zeta_powers[n // q] == base.one():
            raise NoPrimitiveRoot(f"zeta^{n // q} = 1, so the order of zeta is not {n}")

    if ext.modulus.evaluate(sigma_image) != ext.zero():
        raise NotAnAutomorphism("the image of the generator is not a root of the modulus")

    sigma_powers = [ext.one()]
    for _ in range(n - 1):
        sigma_powers.append(sigma_powers[-1] * sigma_image)

    ctx = ValidatedContext(
        input=CyclicExtensionInput(ext, n, zeta, sigma_image),
        sigma_powers=tuple(sigma_powers),
        zeta_powers=tuple(zeta_powers),
    )

    alpha = ext.gen()
    image = alpha
    proper_divisors = [k for k in range(1, n) if n % k == 0]
    for k in range(1, n + 1):
        image = ctx.sigma(image)
        if k in proper_divisors and image == alpha:
            raise AutomorphismOrderMismatch(f"the automorphism has order {k}, expected {n}")
    if image != alpha:
        raise AutomorphismOrderMismatch(f"sigma^{n}(alpha) != alpha")
    return ctx


def sigma_matrix(ctx: ValidatedContext) -> Matrix:
    """Matrix of the automorphism in the power basis 1, alpha, ..., alpha^(n-1).

    Column j is the coordinate vector of s^j, since alpha^j maps to s^j.
    """
    return operator_matrix(list(ctx.sigma_powers))


def check_diagonalizability(ctx: ValidatedContext, m: Matrix) -> tuple[bool, Polynomial]:
    """True iff the operator's minimal polynomial divides X^n - 1 exactly and
    the n-th power of the matrix is the identity."""
    min_poly = operator_min_poly(m)
    xn_minus_1 = Polynomial.x_pow_minus_const(ctx.base_field, ctx.n, ctx.base_field.one())
    _, rem = poly_divmod(xn_minus_1, min_poly)
    ok = (not rem) and m.power(ctx.n) == Matrix.identity(ctx.base_field, ctx.n)
    return ok, min_poly


def eigen_spectrum(ctx: ValidatedContext, m: Matrix, sigma_min_poly: Polynomial | None = None) -> EigenReport:
    """Eigenvalue report over the candidate eigenvalues zeta^0, ..., zeta^(n-1).

    For each power of zeta, the eigenspace is the kernel of (M - zeta^i * I);
    candidates with a nonzero kernel are listed together with their dimension
    and one stored (canonical) eigenvector.
    """
    ident = Matrix.identity(ctx.base_field, ctx.n)
    entries = []
    for i in range(ctx.n):
        lam = ctx.zeta_pow(i)
        basis = nullspace(m - ident.scale(lam))
        if basis:
            entries.append(EigenEntry(i, lam, len(basis), ctx.ext_field.element(basis[0])))
    assert sum(e.dimension for e in entries) <= ctx.n
    if sigma_min_poly is None:
        sigma_min_poly = operator_min_poly(m)
    return EigenReport(tuple(entries), sigma_min_poly)


def check_gamma_closure(ctx: ValidatedContext, report: EigenReport) -> bool:
    """Products of eigenvectors are again eigenvectors, for the product of the
    eigenvalues, and that product eigenvalue is itself in the spectrum."""
    eigenvalues = report.eigenvalues()
    for a in report.entries:
        for b in report.entries:
            product = a.eigenvector * b.eigenvector
            lam_mu = a.eigenvalue * b.eigenvalue
            if ctx.sigma(product) != product * lam_mu:
                return False
            if lam_mu not in eigenvalues:
                return False
    return True


def check_spectrum_complete(ctx: ValidatedContext, report: EigenReport) -> bool:
    """All n powers of zeta occur, each with a one-dimensional eigenspace."""
    dims = [e.dimension for e in report.entries]
    return report.m == ctx.n and all(d == 1 for d in dims) and sum(dims) == ctx.n


def check_fixed_field(ctx: ValidatedContext, m: Matrix) -> bool:
    """The fixed space of the automorphism is exactly the line through 1."""
    ident = Matrix.identity(ctx.base_field, ctx.n)
    basis = nullspace(m - ident)
    if len(basis) != 1:
        return False
    one_vector = tuple(
        ctx.base_field.one() if j == 0 else ctx.base_field.zero() for j in range(ctx.n)
    )
    return basis[0] == one_vector


def extract_radical_generator(ctx: ValidatedContext, m: Matrix) -> ExtensionElement:
    """The canonical zeta-eigenvector: the RREF kernel basis vector of
    (M - zeta*I), rescaled so its lowest-index nonzero coordinate is 1."""
    ident = Matrix.identity(ctx.base_field, ctx.n)
    basis = nullspace(m - ident.scale(ctx.zeta_pow(1)))
    if not basis:
        raise EmptyEigenspace("no eigenvector for zeta; the input is not a cyclic extension as claimed")
    v = basis[0]
    first = next(c for c in v if c)
    inv = ctx.base_field.one() / first
    return ctx.ext_field.element([c * inv for c in v])


def lagrange_resolvent(ctx: ValidatedContext, a: ExtensionElement) -> ExtensionElement:
    """sum over i of zeta^(-i) * sigma^i(a): always a zeta-eigenvector of the
    automorphism (possibly zero), giving a second, independent route to x."""
    cur = ctx.ext_field.coerce(a)
    acc = ctx.ext_field.zero()
    for i in range(ctx.n):
        acc = acc + cur * ctx.zeta_pow(-i)
        cur = ctx.sigma(cur)
    return acc


def _binomial_factorization_holds(ctx: ValidatedContext, x: ExtensionElement, c) -> bool:
    """prod over i of (X - zeta^i * x) = X^n - c, as polynomials over E."""
    ext = ctx.ext_field
    product = Polynomial.one(ext)
    for i in range(ctx.n):
        root = ctx.zeta_pow_ext(i) * x
        product = product * Polynomial(ext, [-root, ext.one()])
    expected = Polynomial.x_pow_minus_const(ext, ctx.n, ext.coerce(c))
    return product == expected


def _root_orbit_transitive(ctx: ValidatedContext, x: ExtensionElement) -> bool:
    """sigma maps zeta^i * x to zeta^(i+1) * x, cycling through all n roots."""
    for i in range(ctx.n):
        if ctx.sigma(ctx.zeta_pow_ext(i) * x) != ctx.zeta_pow_ext(i + 1) * x:
            return False
    return True


def compute_certificate(ctx: ValidatedContext) -> KummerCertificate:
    """Run the whole pipeline and assemble the certificate.

    Flags are never omitted: a failing step yields a false flag (and an
    invalid certificate), not an exception, except where no generator can be
    extracted at all (EmptyEigenspace) or arithmetic itself witnesses a
    reducible modulus (NotInvertible).
    """
    m = sigma_matrix(ctx)
    diag_ok, sigma_min_poly = check_diagonalizability(ctx, m)
    report = eigen_spectrum(ctx, m, sigma_min_poly)
    closure_ok = check_gamma_closure(ctx, report)
    complete_ok = check_spectrum_complete(ctx, report)
    fixed_ok = check_fixed_field(ctx, m)

    x = extract_radical_generator(ctx, m)
    x_pow_n = x ** ctx.n
    c_base = x_pow_n.as_base()
    c_in_base = c_base is not None and ctx.sigma(x_pow_n) == x_pow_n
    # for the (invalid) case x^n not in K, record the constant coordinate so
    # the certificate still serializes; the false flag tells the story
    c = c_base if c_base is not None else x_pow_n.coords[0]

    x_min_poly = element_min_poly(x)

    checks = {
        "hypotheses_ok": True,
        "sigma_is_automorphism": True,
        "sigma_order_n": True,
        "fixed_field_is_K": fixed_ok,
        "min_poly_divides_Xn_minus_1": diag_ok,
        "spectrum_complete": complete_ok and closure_ok,
        "c_in_base": c_in_base,
        "x_min_poly_degree_n": x_min_poly.degree == ctx.n,
        "root_orbit_transitive": _root_orbit_transitive(ctx, x),
        "binomial_factorization": _binomial_factorization_holds(ctx, x, c),
    }
    return KummerCertificate(ctx.input, report, x, c, x_min_poly, checks)


def certify(inp: CyclicExtensionInput) -> KummerCertificate:
    """validate_setup followed by compute_certificate."""
    return compute_certificate(validate_setup(inp))


def verify_certificate_report(cert: KummerCertificate) -> tuple[bool, list[str]]:
    """Re-derive every property from the echoed input, trusting only x.

    Returns (ok, failures) where failures names every property that did not
    hold. Stored intermediates (eigen report, c, x_min_poly, flags) are
    checked against fresh recomputations rather than believed.
    """
    failures: list[str] = []
    try:
        ctx = validate_setup(cert.input)
    except ValidationError as exc:
        return False, [f"hypotheses hold ({exc})"]

    ext = ctx.ext_field
    try:
        x = ext.coerce(cert.x)
        c = ctx.base_field.coerce(cert.c)
        if not isinstance(cert.x_min_poly, Polynomial) or cert.x_min_poly.field != ctx.base_field:
            raise MalformedCertificate("x_min_poly is not a polynomial over K")
        if set(cert.checks) != set(CHECK_NAMES):
            raise MalformedCertificate("check flags are not exactly the documented set")
    except (FieldMismatch, AttributeError, TypeError) as exc:
        raise MalformedCertificate(str(exc)) from exc

    m = sigma_matrix(ctx)
    diag_ok, sigma_min_poly = check_diagonalizability(ctx, m)
    if not diag_ok:
        failures.append("sigma min poly divides X^n - 1 and sigma^n = id")
    report = eigen_spectrum(ctx, m, sigma_min_poly)
    if not check_gamma_closure(ctx, report):
        failures.append("eigenvalue closure")
    if not check_spectrum_complete(ctx, report):
        failures.append("spectrum complete")
    if not check_fixed_field(ctx, m):
        failures.append("fixed space = span{1}")

    stored = [(e.i, e.eigenvalue, e.dimension) for e in cert.eigen.entries]
    fresh = [(e.i, e.eigenvalue, e.dimension) for e in report.entries]
    if stored != fresh:
        failures.append("eigen report matches recomputation")

    if not x:
        failures.append("x != 0")
        return False, failures

    if ctx.sigma(x) != ctx.zeta_pow_ext(1) * x:
        failures.append("sigma(x) = zeta*x")
    x_pow_n = x ** ctx.n
    if x_pow_n.as_base() is None:
        failures.append("x^n in K")
    if ctx.sigma(x_pow_n) != x_pow_n:
        failures.append("sigma(x^n) = x^n")
    if x_pow_n != ext.embed(c):
        failures.append("x^n = c")

    x_min_poly = element_min_poly(x)
    if x_min_poly != cert.x_min_poly:
        failures.append("stored x_min_poly matches recomputation")
    if x_min_poly.degree != ctx.n:
        failures.append("deg x_min_poly = n")

    if not _root_orbit_transitive(ctx, x):
        failures.append("root orbit transitive")
    if not _binomial_factorization_holds(ctx, x, c):
        failures.append("binomial factorization")

    if not all(cert.checks[name] for name in CHECK_NAMES):
        failures.append("all stored flags true")

    return not failures, failures


def verify_certificate(cert: KummerCertificate) -> bool:
    """True iff every certificate property re-derives from scratch."""
    ok, _ = verify_certificate_report(cert)
    return ok

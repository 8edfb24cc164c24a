"""Absolute zeta layer: cyclotomic forms, the structure-theorem evaluator,
its two independent oracles (direct series, Mellin quadrature), and the
functional-equation verifier for cycle-graph zetas.

A cyclotomic form represents f(x) = x^(l/2) * prod(x^m(i) - 1) / prod(x^n(j) - 1).
Such f is reciprocally automorphic with sign (-1)^(a-b) and weight
l + |m| - |n|, and its absolute Hurwitz transform Z_f(w, s) unfolds into an
alternating sum of multiple Hurwitz zetas over subsets of the numerator
exponents, with the matching product of multiple gammas for zeta_f(s).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from scipy.integrate import quad

from .errors import (
    DomainError,
    IdentityCheckError,
    InvalidParameterError,
    NonPositiveShiftError,
    NotCyclotomicError,
    OddPowerError,
    PoleError,
    QuadratureBudgetError,
    SingularPointError,
)
from .multizeta import (
    DEFAULT_POLICY,
    MultiZetaParams,
    PrecisionPolicy,
    _rectangular_series,
    log_gamma,
    multiple_gamma,
    multiple_hurwitz_zeta,
    multiple_hurwitz_zeta_finite_part,
    multiple_sine,
)
from .polynomials import ExactPolynomial, ExactRationalFunction

_METHODS = ("structure", "series", "mellin")


@dataclass(frozen=True)
class CyclotomicForm:
    """Exponent data of x^(l/2) * prod(x^m(i)-1) / prod(x^n(j)-1)."""

    l: int
    num_exponents: tuple[int, ...]
    den_exponents: tuple[int, ...]

    def __post_init__(self):
        if self.l % 2 != 0:
            raise OddPowerError(f"monomial power l = {self.l} must be even")
        for e in self.num_exponents + self.den_exponents:
            if not isinstance(e, int) or e < 1:
                raise InvalidParameterError(f"exponents must be positive integers, got {e!r}")

    @property
    def a(self) -> int:
        return len(self.num_exponents)

    @property
    def b(self) -> int:
        return len(self.den_exponents)

    @property
    def abs_m(self) -> int:
        return sum(self.num_exponents)

    @property
    def abs_n(self) -> int:
        return sum(self.den_exponents)

    @property
    def sign(self) -> int:
        return 1 if (self.a - self.b) % 2 == 0 else -1

    @property
    def weight(self) -> int:
        return self.l + self.abs_m - self.abs_n

    @property
    def equal_den_periods(self) -> bool:
        return self.b > 0 and len(set(self.den_exponents)) == 1

    def as_rational_function(self) -> ExactRationalFunction:
        num = ExactPolynomial.one()
        den = ExactPolynomial.one()
        for e in self.num_exponents:
            num = num * _x_pow_minus_one(e)
        for e in self.den_exponents:
            den = den * _x_pow_minus_one(e)
        half = self.l // 2
        if half >= 0:
            num = num * ExactPolynomial.monomial(half)
        else:
            den = den * ExactPolynomial.monomial(-half)
        return ExactRationalFunction.from_parts(num, den)

    def eval_at(self, x: float) -> float:
        num = 1.0
        for e in self.num_exponents:
            num *= x ** e - 1.0
        den = 1.0
        for e in self.den_exponents:
            den *= x ** e - 1.0
        return x ** (self.l // 2) * num / den

    def to_dict(self) -> dict:
        return {"l": self.l, "m": list(self.num_exponents), "n": list(self.den_exponents)}


@dataclass(frozen=True)
class AbsZetaValue:
    """Complex value with the method that produced it and an error estimate."""

    value: complex
    method: str
    error: float

    def to_dict(self) -> dict:
        return {"value": [self.value.real, self.value.imag],
                "err": self.error, "method": self.method}


def _x_pow_minus_one(e: int) -> ExactPolynomial:
    return ExactPolynomial.from_coeffs([-1] + [0] * (e - 1) + [1])


@lru_cache(maxsize=None)
def _cyclotomic_poly(d: int) -> ExactPolynomial:
    # Phi_d = (x^d - 1) / prod of Phi_e over proper divisors e of d.
    poly = _x_pow_minus_one(d)
    for e in range(1, d):
        if d % e == 0:
            poly, rem = poly.divmod(_cyclotomic_poly(e))
            assert rem.is_zero
    return poly


def _strip_monomial(p: ExactPolynomial) -> tuple[int, ExactPolynomial]:
    k = 0
    while k <= p.degree and p.coeff(k) == 0:
        k += 1
    return k, ExactPolynomial(p.coeffs[k:])


def _totient(d: int) -> int:
    result = d
    rest = d
    p = 2
    while p * p <= rest:
        if rest % p == 0:
            while rest % p == 0:
                rest //= p
            result -= result // p
        p += 1
    if rest > 1:
        result -= result // rest
    return result


def _cyclotomic_exponents(p: ExactPolynomial) -> tuple[dict[int, int], Fraction]:
    """Split p into prod Phi_d^e(d) times a constant, or raise.

    Phi_d has degree totient(d), so candidate indices run past the degree
    of p; totient(d) > sqrt(d) for d > 6 bounds the scan at degree^2.
    """
    exps: dict[int, int] = {}
    limit = max(6, p.degree * p.degree)
    for d in range(1, limit + 1):
        if p.degree == 0:
            break
        if _totient(d) > p.degree:
            continue
        phi = _cyclotomic_poly(d)
        while p.degree >= phi.degree:
            q, rem = p.divmod(phi)
            if not rem.is_zero:
                break
            exps[d] = exps.get(d, 0) + 1
            p = q
    if p.degree != 0:
        raise NotCyclotomicError(
            f"non-cyclotomic factor of degree {p.degree} remains")
    return exps, p.coeff(0)


def factor_cyclotomic(f: ExactRationalFunction) -> CyclotomicForm:
    """Express a rational function in the cyclotomic family, or raise.

    The numerator and denominator are split into cyclotomic polynomials;
    the exponent pattern is then refolded into (x^N - 1) factors, always
    preferring the largest N (divisor-lattice triangular solve). Reduced
    inputs work: 1/(x+1) comes back as (x-1)/(x^2-1). Fails when a
    non-cyclotomic factor or a residual constant other than 1 remains
    (the family has no slot for an overall -1).
    """
    if f.num.is_zero:
        raise NotCyclotomicError("zero function is not in the family")
    p_num, num = _strip_monomial(f.num)
    p_den, den = _strip_monomial(f.den)
    num_exps, num_const = _cyclotomic_exponents(num)
    den_exps, den_const = _cyclotomic_exponents(den)

    top = max([1, *num_exps, *den_exps])
    net = {d: num_exps.get(d, 0) - den_exps.get(d, 0) for d in range(1, top + 1)}
    fold: dict[int, int] = {}
    for d in range(top, 0, -1):
        fold[d] = net[d] - sum(fold[k] for k in range(d + 1, top + 1) if k % d == 0)
    m_list = []
    n_list = []
    for d in sorted(fold, reverse=True):
        if fold[d] > 0:
            m_list.extend([d] * fold[d])
        elif fold[d] < 0:
            n_list.extend([d] * (-fold[d]))
    if num_const != den_const:
        raise NotCyclotomicError(
            f"residual constant {num_const}/{den_const} is not 1; "
            "the family cannot absorb a sign or scale")

    form = CyclotomicForm(l=2 * (p_num - p_den),
                          num_exponents=tuple(m_list),
                          den_exponents=tuple(n_list))
    if form.as_rational_function() != f:
        raise NotCyclotomicError("internal refold failed to reproduce the function")
    for point in (Fraction(2), Fraction(3), Fraction(5, 2)):
        assert f.eval_exact(point) == form.as_rational_function().eval_exact(point)
    return form


def automorphic_data(form: CyclotomicForm, tol: float = 1e-10) -> tuple[int, int]:
    """(sign, weight) of the form's reciprocal-argument automorphy.

    Also samples f(1/x) = sign * x^(-weight) * f(x) at a few points and
    raises IdentityCheckError if the residual exceeds tol.
    """
    sign, weight = form.sign, form.weight
    for x in (2.0, 3.0, 7.5):
        lhs = form.eval_at(1.0 / x)
        rhs = sign * x ** float(-weight) * form.eval_at(x)
        if abs(lhs - rhs) > tol * max(abs(lhs), 1e-30):
            raise IdentityCheckError(
                f"automorphy residual {abs(lhs - rhs):.3e} at x = {x}")
    return sign, weight


def _subset_arguments(form: CyclotomicForm, s: complex) -> list[tuple[int, complex]]:
    """(sign, shift) pairs over subsets I of the numerator exponents.

    shift = s - l/2 + |n| - m(I); sign = (-1)^(a - |I|). Subsets of the
    index set, so duplicate exponents contribute independently.
    """
    base = s - form.l / 2.0 + form.abs_n
    out = []
    for mask in range(1 << form.a):
        m_i = 0
        bits = 0
        for i in range(form.a):
            if mask >> i & 1:
                m_i += form.num_exponents[i]
                bits += 1
        sign = 1 if (form.a - bits) % 2 == 0 else -1
        out.append((sign, base - m_i))
    return out


def _structure_value(form: CyclotomicForm, w: complex, s: complex,
                     policy: PrecisionPolicy) -> AbsZetaValue:
    if not form.equal_den_periods:
        raise DomainError("structure method needs equal denominator exponents")
    period = float(form.den_exponents[0])

    # Integer w in (b-a, b] hits a pole of each subset term whose residue
    # (a degree b-w polynomial in the shift) is killed by the a-fold
    # alternating difference, so the sum is evaluated through finite
    # Laurent parts. Poles at or below b-a are genuine poles of Z_f.
    pole = None
    if w.imag == 0.0 and float(w.real).is_integer() and 1 <= w.real <= form.b:
        p = int(w.real)
        if p <= form.b - form.a:
            raise PoleError(p, f"Z_f of this form has a pole at w = {p}")
        pole = p

    total = 0j
    mag = 0.0
    for sign, shift in _subset_arguments(form, s):
        params = MultiZetaParams(order=form.b, shift=shift, periods=(period,) * form.b)
        if pole is None:
            term = multiple_hurwitz_zeta(params, w, policy)
        else:
            term = multiple_hurwitz_zeta_finite_part(params, pole, policy)
        total += sign * term
        mag += abs(term)
    return AbsZetaValue(value=total, method="structure", error=10 * policy.target * max(mag, 1e-30))


def _series_value(form: CyclotomicForm, w: complex, s: complex,
                  policy: PrecisionPolicy) -> AbsZetaValue:
    if w.real <= form.b - form.a:
        raise DomainError(f"series needs Re(w) > {form.b - form.a}")
    subsets = _subset_arguments(form, s)
    if not form.equal_den_periods:
        # unequal periods: each subset term must converge on its own
        if w.real <= form.b:
            raise DomainError("series with unequal periods needs Re(w) > b")
        total = 0j
        err = 0.0
        for sign, shift in subsets:
            params = MultiZetaParams(order=form.b, shift=shift,
                                     periods=tuple(float(e) for e in form.den_exponents))
            value, bound = _rectangular_series(params, w, policy)
            total += sign * value
            err += bound
        return AbsZetaValue(value=total, method="series", error=err)

    if any(shift.real <= 0 for _, shift in subsets):
        raise DomainError("series needs every lattice base s - l/2 + |n| - m(I) to have Re > 0")
    period = float(form.den_exponents[0])
    mult_poly = _multiplicity_poly(form.b)
    mult_deriv = [j * c for j, c in enumerate(mult_poly)][1:] or [0.0]

    def _poly(coeffs, t: float) -> float:
        acc = 0.0
        for c in reversed(coeffs):
            acc = acc * t + c
        return acc

    def term(k: float) -> complex:
        inner = 0j
        for sign, shift in subsets:
            inner += sign * cmath.exp(-w * cmath.log(shift + k * period))
        return _poly(mult_poly, k) * inner

    def term_prime(k: float) -> complex:
        mult = _poly(mult_poly, k)
        dmult = _poly(mult_deriv, k)
        out = 0j
        for sign, shift in subsets:
            base = shift + k * period
            p = cmath.exp(-w * cmath.log(base))
            out += sign * (dmult * p - w * period * mult * p / base)
        return out

    # Tail handled Euler-Maclaurin style: closed-form integral + g/2 - g'/12,
    # so the summation can stop once |g'(k)|/12 clears the target.
    total = 0j
    k = 0
    block = 256
    while True:
        for _ in range(block):
            total += term(k)
            k += 1
        scale = max(abs(total), 1e-30)
        residual = abs(term_prime(k)) / 12.0
        if residual <= policy.target * scale:
            break
        if k >= policy.series_budget:
            raise DomainError(f"series budget exhausted at k = {k}")
        block = min(block * 2, 8192, policy.series_budget - k)
    total += _combined_tail_integral(mult_poly, subsets, period, float(k), w)
    total += term(k) / 2.0 - term_prime(k) / 12.0
    return AbsZetaValue(value=total, method="series",
                        error=abs(term_prime(k)) / 12.0 + policy.target * scale)


def _multiplicity_poly(b: int) -> list[float]:
    """Coefficients in t of the lattice multiplicity binom(t+b-1, b-1)."""
    coeffs = [1.0]
    for i in range(1, b):
        nxt = [0.0] * (len(coeffs) + 1)
        for j, c in enumerate(coeffs):
            nxt[j] += c * i
            nxt[j + 1] += c
        coeffs = nxt
    fact = float(math.factorial(b - 1))
    return [c / fact for c in coeffs]


def _combined_tail_integral(mult_poly: list[float], subsets: list[tuple[int, complex]],
                            period: float, start: float, w: complex) -> complex:
    """Signed sum over subsets of the closed-form series tail integral.

    With v = x + t*period, each integral of mult(t) v^(-w) splits into
    pieces C_e(x) v(start)^(e+1-w) / (w-e-1). At integer w = e+1 the
    individual pieces diverge but their signed coefficient sum vanishes
    (same cancellation as the structure method), leaving the l'Hopital
    limit -sum sign C_e(x) log(v(start)).
    """
    n = period
    total = 0j
    for sign, x in subsets:
        # rewrite mult(t) in powers of v via t = (v - x)/n
        v_coeffs = [0j] * len(mult_poly)
        for j, a in enumerate(mult_poly):
            scale = a / n ** j
            for i in range(j + 1):
                v_coeffs[i] += scale * math.comb(j, i) * (-x) ** (j - i)
        v_start = x + start * n
        log_v = cmath.log(v_start)
        for e, c_e in enumerate(v_coeffs):
            if w.imag == 0.0 and w.real == e + 1:
                total += sign * c_e * (-log_v) / n
            else:
                total += sign * c_e * cmath.exp((e + 1 - w) * log_v) / ((w - e - 1) * n)
    return total


def _mellin_value(form: CyclotomicForm, w: complex, s: complex,
                  policy: PrecisionPolicy) -> AbsZetaValue:
    """Quadrature of (1/Gamma(w)) * integral of f(e^t) e^(-st) t^(w-1).

    Split at t = 1. On (0, 1] the substitution t = tau^p flattens the
    t^(w-1+a-b) endpoint; on [1, inf) the substitution t = 1 + e^v is
    truncated where the integrand drops below 1e-18.
    """
    gap = w.real - (form.b - form.a)
    if gap <= 0:
        raise DomainError(f"Mellin transform needs Re(w) > {form.b - form.a}")
    if w.real <= 0:
        raise DomainError("Mellin normalization 1/Gamma(w) needs Re(w) > 0")
    growth = form.l / 2.0 + form.abs_m - form.abs_n
    if s.real <= growth:
        raise DomainError(f"Mellin tail needs Re(s) > {growth}")

    def log_f_exp(t: float) -> float:
        # log f(e^t) for t > 0; every (e^(et) - 1) factor is positive, and
        # the log-space form cannot overflow for large t
        acc = 0.5 * form.l * t
        for e in form.num_exponents:
            x = e * t
            acc += x if x > 50.0 else math.log(math.expm1(x))
        for e in form.den_exponents:
            x = e * t
            acc -= x if x > 50.0 else math.log(math.expm1(x))
        return acc

    p = max(2, math.ceil(2.5 / gap))

    def near_zero(tau: float) -> complex:
        if tau == 0.0:
            return 0j
        t = tau ** p
        if t == 0.0:
            return 0j
        exponent = log_f_exp(t) - s * t + (w - 1) * math.log(t)
        return cmath.exp(exponent) * p * tau ** (p - 1)

    def tail(v: float) -> complex:
        t = 1.0 + math.exp(v)
        exponent = log_f_exp(t) - s * t + (w - 1) * math.log(t) + v
        if exponent.real < -750.0:
            return 0j
        return cmath.exp(exponent)

    v_hi = 1.0
    while abs(tail(v_hi)) > 1e-18 and v_hi < 700.0:
        v_hi += 1.0
    part1, err1 = quad(near_zero, 0.0, 1.0, epsabs=1e-13, epsrel=1e-11,
                       limit=policy.quad_limit, complex_func=True)
    part2, err2 = quad(tail, -45.0, v_hi, epsabs=1e-13, epsrel=1e-11,
                       limit=policy.quad_limit, complex_func=True)
    inv_gamma = cmath.exp(-log_gamma(w, policy))
    value = (part1 + part2) * inv_gamma
    quad_err = (abs(err1) + abs(err2)) * abs(inv_gamma)
    if quad_err > 1e-7 * abs(value) + 1e-15:
        raise QuadratureBudgetError(
            f"quadrature error estimate {quad_err:.3e} too large for {value:.6e}")
    err = quad_err + 10 * policy.target * abs(value)
    return AbsZetaValue(value=value, method="mellin", error=err)


def absolute_hurwitz_Z(form: CyclotomicForm, w, s, method: str = "structure",
                       policy: PrecisionPolicy = DEFAULT_POLICY) -> AbsZetaValue:
    """Absolute Hurwitz zeta Z_f(w, s) of the form by the chosen method.

    structure: alternating sum of analytically continued multiple Hurwitz
    zetas (equal denominator exponents required, b <= 3).
    series: the explicit lattice sum with an integral-corrected tail
    (Re(w) > b - a).
    mellin: adaptive quadrature of the Mellin integral (Re(w) > b - a).
    """
    w, s = complex(w), complex(s)
    if method == "structure":
        return _structure_value(form, w, s, policy)
    if method == "series":
        return _series_value(form, w, s, policy)
    if method == "mellin":
        return _mellin_value(form, w, s, policy)
    raise InvalidParameterError(f"method must be one of {_METHODS}, got {method!r}")


def absolute_zeta(form: CyclotomicForm, s,
                  policy: PrecisionPolicy = DEFAULT_POLICY) -> AbsZetaValue:
    """zeta_f(s) = exp(d/dw Z_f(w, s) at w = 0), via the gamma product.

    Evaluates the product over subsets I of multiple gammas at
    s - l/2 + |n| - m(I) with exponents (-1)^(a - |I|).
    """
    if not form.equal_den_periods:
        raise DomainError("absolute zeta needs equal denominator exponents")
    s = complex(s)
    period = float(form.den_exponents[0])
    value = 1 + 0j
    try:
        for sign, shift in _subset_arguments(form, s):
            params = MultiZetaParams(order=form.b, shift=shift, periods=(period,) * form.b)
            g = multiple_gamma(params, policy)
            value = value * g if sign > 0 else value / g
    except PoleError as exc:
        raise DomainError(f"gamma evaluation hit a pole: {exc}") from exc
    except NonPositiveShiftError as exc:
        raise DomainError(f"gamma argument on the nonpositive lattice: {exc}") from exc
    err = (1 << form.a) * 10 * policy.target * abs(value)
    return AbsZetaValue(value=value, method="structure", error=err)


def cycle_zeta_form(n: int) -> CyclotomicForm:
    """The Grover zeta of the n-cycle, 1/(x^n - 1)^2, as a cyclotomic form."""
    if n < 3:
        raise InvalidParameterError("cycle graphs need n >= 3")
    return CyclotomicForm(l=0, num_exponents=(), den_exponents=(n, n))


@dataclass(frozen=True)
class FunctionalEquationReport:
    n: int
    s: float
    lhs: complex
    rhs: complex
    residual: float
    ok: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n, "s": self.s,
            "lhs": [self.lhs.real, self.lhs.imag],
            "rhs": [self.rhs.real, self.rhs.imag],
            "residual": self.residual,
            "status": "ok" if self.ok else "failed",
        }


def verify_functional_equation(n: int, s: float, tol: float = 1e-6,
                               policy: PrecisionPolicy = DEFAULT_POLICY
                               ) -> FunctionalEquationReport:
    """Check zeta_f(-2n - s) = S_2(s + 2n, (n, n)) * zeta_f(s) for the
    n-cycle Grover zeta, reporting the relative residual.

    The gamma arguments live on the shifted lattices, so s on
    {k n : k >= 0} or {-2n - k n : k >= 0} is rejected as singular.
    """
    if n < 3:
        raise InvalidParameterError("functional equation is for cycle graphs, n >= 3")
    s = float(s)
    for k in range(0, 64):
        if abs(s - k * n) < 1e-9 or abs(s + 2 * n + k * n) < 1e-9:
            raise SingularPointError(f"s = {s} sits on the singular lattice for n = {n}")

    form = cycle_zeta_form(n)
    lhs = absolute_zeta(form, -2.0 * n - s, policy).value
    sine = multiple_sine(MultiZetaParams(order=2, shift=s + 2.0 * n,
                                         periods=(float(n), float(n))), policy)
    rhs = sine * absolute_zeta(form, s, policy).value
    residual = abs(lhs - rhs) / max(abs(lhs), 1e-300)
    return FunctionalEquationReport(n=n, s=s, lhs=lhs, rhs=rhs,
                                    residual=residual, ok=residual <= tol)

"""Exact univariate polynomials, rational functions, and determinants.

Coefficients are Fractions indexed by ascending power of u. The zero
polynomial is the empty coefficient tuple (degree -1). Rational functions
are kept in lowest terms with a monic denominator; any sign lives in the
numerator, which makes the printable form unique.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import NonSquareError, PoleError
from .matrices import ExactMatrix, det_exact


def _trim(coeffs) -> tuple[Fraction, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class ExactPolynomial:
    coeffs: tuple[Fraction, ...]

    @classmethod
    def from_coeffs(cls, coeffs) -> "ExactPolynomial":
        return cls(_trim(Fraction(c) for c in coeffs))

    @classmethod
    def zero(cls) -> "ExactPolynomial":
        return cls(())

    @classmethod
    def one(cls) -> "ExactPolynomial":
        return cls((Fraction(1),))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "ExactPolynomial":
        c = Fraction(coeff)
        if c == 0:
            return cls(())
        return cls(tuple([Fraction(0)] * power) + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __add__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial(_trim(
            self.coeff(k) + other.coeff(k) for k in range(n)))

    def __sub__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return ExactPolynomial(_trim(
            self.coeff(k) - other.coeff(k) for k in range(n)))

    def __neg__(self) -> "ExactPolynomial":
        return ExactPolynomial(tuple(-c for c in self.coeffs))

    def __mul__(self, other: "ExactPolynomial") -> "ExactPolynomial":
        if self.is_zero or other.is_zero:
            return ExactPolynomial(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] += a * b
        return ExactPolynomial(_trim(out))

    def scale(self, c) -> "ExactPolynomial":
        c = Fraction(c)
        if c == 0:
            return ExactPolynomial(())
        return ExactPolynomial(tuple(c * x for x in self.coeffs))

    def __pow__(self, k: int) -> "ExactPolynomial":
        if k < 0:
            raise ValueError("negative power")
        result = ExactPolynomial.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: "ExactPolynomial") -> tuple["ExactPolynomial", "ExactPolynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return ExactPolynomial(()), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.leading()
        for k in range(dq, -1, -1):
            top = rem[k + other.degree]
            if top:
                q = top / lead
                quot[k] = q
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return ExactPolynomial(_trim(quot)), ExactPolynomial(_trim(rem))

    def divides_exactly(self, other: "ExactPolynomial") -> bool:
        """True when self divides other with zero remainder."""
        _, rem = other.divmod(self)
        return rem.is_zero

    def monic(self) -> "ExactPolynomial":
        if self.is_zero:
            return self
        return self.scale(1 / self.leading())

    def reversed(self) -> "ExactPolynomial":
        """Coefficient reversal u^deg * p(1/u)."""
        return ExactPolynomial(_trim(reversed(self.coeffs)))

    def __call__(self, x):
        """Horner evaluation; exact for Fraction x, floating otherwise."""
        acc = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + (c if isinstance(x, (int, Fraction)) else complex(c))
        return acc

    def to_json(self) -> str:
        return json.dumps({"coeffs": [str(c) for c in self.coeffs]})

    @classmethod
    def from_json(cls, text: str) -> "ExactPolynomial":
        return cls.from_coeffs(json.loads(text)["coeffs"])


def poly_gcd(a: ExactPolynomial, b: ExactPolynomial) -> ExactPolynomial:
    """Monic gcd over the rationals (Euclid)."""
    while not b.is_zero:
        _, r = a.divmod(b)
        a, b = b, r
    return a.monic() if not a.is_zero else a


@dataclass(frozen=True)
class ExactRationalFunction:
    """num/den in lowest terms, den monic and nonzero."""

    num: ExactPolynomial
    den: ExactPolynomial

    @classmethod
    def from_parts(cls, num: ExactPolynomial, den: ExactPolynomial) -> "ExactRationalFunction":
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            return cls(ExactPolynomial(()), ExactPolynomial.one())
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, _ = num.divmod(g)
            den, _ = den.divmod(g)
        lead = den.leading()
        return cls(num.scale(1 / lead), den.scale(1 / lead))

    @classmethod
    def from_polynomial(cls, p: ExactPolynomial) -> "ExactRationalFunction":
        return cls.from_parts(p, ExactPolynomial.one())

    @classmethod
    def one(cls) -> "ExactRationalFunction":
        return cls.from_polynomial(ExactPolynomial.one())

    @property
    def is_polynomial(self) -> bool:
        return self.den.degree == 0

    def __mul__(self, other: "ExactRationalFunction") -> "ExactRationalFunction":
        return ExactRationalFunction.from_parts(self.num * other.num, self.den * other.den)

    def __truediv__(self, other: "ExactRationalFunction") -> "ExactRationalFunction":
        return ExactRationalFunction.from_parts(self.num * other.den, self.den * other.num)

    def scale_monomial(self, power: int) -> "ExactRationalFunction":
        """Multiply by u^power (negative powers shift the denominator)."""
        if power >= 0:
            return ExactRationalFunction.from_parts(
                self.num * ExactPolynomial.monomial(power), self.den)
        return ExactRationalFunction.from_parts(
            self.num, self.den * ExactPolynomial.monomial(-power))

    def scale(self, c) -> "ExactRationalFunction":
        return ExactRationalFunction.from_parts(self.num.scale(c), self.den)

    def reciprocal_argument(self) -> "ExactRationalFunction":
        """The function u -> f(1/u), as a reduced rational function."""
        shift = self.den.degree - self.num.degree
        num, den = self.num.reversed(), self.den.reversed()
        if shift >= 0:
            num = num * ExactPolynomial.monomial(shift)
        else:
            den = den * ExactPolynomial.monomial(-shift)
        return ExactRationalFunction.from_parts(num, den)

    def eval_exact(self, x) -> Fraction:
        x = Fraction(x)
        d = self.den(x)
        if d == 0:
            raise PoleError(x)
        return self.num(x) / d

    def to_json(self) -> str:
        return json.dumps({
            "numerator": {"coeffs": [str(c) for c in self.num.coeffs]},
            "denominator": {"coeffs": [str(c) for c in self.den.coeffs]},
        })

    @classmethod
    def from_json(cls, text: str) -> "ExactRationalFunction":
        raw = json.loads(text)
        return cls.from_parts(
            ExactPolynomial.from_coeffs(raw["numerator"]["coeffs"]),
            ExactPolynomial.from_coeffs(raw["denominator"]["coeffs"]))


def rational_function_eval(f: ExactRationalFunction, x) -> complex:
    """Floating evaluation of f at a complex point, rejecting near-poles."""
    x = complex(x)
    den = f.den(x)
    tol = 1e-12 * max(1.0, abs(x)) ** max(f.den.degree, 0)
    if abs(den) <= tol:
        raise PoleError(x)
    return complex(f.num(x)) / den


@lru_cache(maxsize=None)
def reversed_charpoly(matrix: ExactMatrix) -> ExactPolynomial:
    """det(I - u*M) as an exact polynomial (Faddeev-LeVerrier).

    The constant term is always 1 and the coefficient of u^k is the k-th
    signed elementary symmetric function of the eigenvalues.
    """
    if not matrix.is_square:
        raise NonSquareError("characteristic polynomial needs a square matrix")
    n = matrix.rows
    if n == 0:
        return ExactPolynomial.one()
    # char[k] = coefficient of lambda^k in det(lambda I - M)
    char = [Fraction(0)] * (n + 1)
    char[n] = Fraction(1)
    work = [list(row) for row in matrix.entries]
    m_rows = matrix.entries
    for k in range(1, n + 1):
        trace = sum(work[i][i] for i in range(n))
        char[n - k] = -trace / k
        if k < n:
            for i in range(n):
                work[i][i] += char[n - k]
            nxt = []
            for i in range(n):
                mrow = m_rows[i]
                acc = [Fraction(0)] * n
                for t in range(n):
                    x = mrow[t]
                    if x:
                        wrow = work[t]
                        for j in range(n):
                            if wrow[j]:
                                acc[j] += x * wrow[j]
                nxt.append(acc)
            work = nxt
    # det(I - uM) = u^n * char(1/u): reverse the coefficients
    return ExactPolynomial(_trim(reversed(char)))


def poly_matrix_det(rows, points=None) -> ExactPolynomial:
    """Exact determinant of a square matrix of ExactPolynomial entries.

    Evaluates the matrix at degree_bound + 1 distinct integer points,
    takes exact scalar determinants, and interpolates (Newton form).
    The default points are 0..degree_bound; any other distinct integers
    give the same polynomial.
    """
    size = len(rows)
    if any(len(r) != size for r in rows):
        raise NonSquareError("polynomial determinant needs a square matrix")
    if size == 0:
        return ExactPolynomial.one()
    bound = 0
    for r in rows:
        bound += max((p.degree for p in r if not p.is_zero), default=0)
    if points is None:
        points = range(bound + 1)
    xs = [Fraction(p) for p in points]
    if len(set(xs)) != len(xs) or len(xs) < bound + 1:
        raise ValueError(f"need {bound + 1} distinct evaluation points")
    xs = xs[:bound + 1]

    values = []
    for x in xs:
        m = ExactMatrix(tuple(tuple(p(x) for p in r) for r in rows))
        values.append(det_exact(m))

    # Newton divided differences, then expand to the monomial basis.
    coeffs = list(values)
    for j in range(1, len(xs)):
        for i in range(len(xs) - 1, j - 1, -1):
            coeffs[i] = (coeffs[i] - coeffs[i - 1]) / (xs[i] - xs[i - j])
    poly = ExactPolynomial(())
    basis = ExactPolynomial.one()
    for i, c in enumerate(coeffs):
        poly = poly + basis.scale(c)
        basis = basis * ExactPolynomial.from_coeffs([-xs[i], 1])
    return poly

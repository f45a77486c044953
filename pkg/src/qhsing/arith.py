"""Exact arithmetic: dense integer polynomials, cyclotomic polynomials and the
divisor algebra spanned by Lambda_k = div(t^k - 1).

Everything here is exact. Rationals are :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Iterator, Mapping

__all__ = [
    "DivisorElement",
    "IntPolynomial",
    "LambdaCombination",
    "NegativeMultiplicity",
    "NotDivisible",
    "NotIntegral",
    "cyclotomic_poly",
    "divisor_to_poly",
    "divisors",
    "lambda_mul",
    "lambda_to_divisor",
    "poly_exact_div",
    "totient",
]


class NotDivisible(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class NotIntegral(ArithmeticError):
    """A divisor has a non-integer multiplicity."""


class NegativeMultiplicity(ValueError):
    """A divisor with negative multiplicities is not a polynomial."""


@dataclass(frozen=True)
class IntPolynomial:
    """Dense polynomial in ``t`` with integer coefficients.

    ``coeffs[k]`` is the coefficient of ``t**k``; trailing zeros are trimmed,
    so the zero polynomial has ``coeffs == ()``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = tuple(int(x) for x in self.coeffs)
        end = len(c)
        while end and c[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", c[:end])

    @classmethod
    def monomial(cls, k: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * k + (coeff,))

    @classmethod
    def binomial(cls, k: int) -> IntPolynomial:
        """``t**k - 1``."""
        if k == 0:
            return cls()
        return cls((-1,) + (0,) * (k - 1) + (1,))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def terms(self) -> Iterator[tuple[int, int]]:
        """Nonzero ``(exponent, coefficient)`` pairs in ascending order."""
        return ((k, c) for k, c in enumerate(self.coeffs) if c)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(tuple(out))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        if isinstance(other, int):
            return IntPolynomial(tuple(other * c for c in self.coeffs))
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        # iterate over the sparser factor; binomials t^k - 1 are the common case
        dense, sparse = self, other
        if sum(1 for c in dense.coeffs if c) < sum(1 for c in sparse.coeffs if c):
            dense, sparse = sparse, dense
        out = [0] * (dense.degree + sparse.degree + 1)
        src = dense.coeffs
        for k, c in sparse.terms():
            for i, x in enumerate(src):
                if x:
                    out[i + k] += c * x
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, e: int) -> IntPolynomial:
        result = IntPolynomial((1,))
        for _ in range(e):
            result = result * self
        return result

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                var = "t" if k == 1 else f"t^{k}"
                body = var if mag == 1 else f"{mag}*{var}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text


def poly_exact_div(num: IntPolynomial, den: IntPolynomial) -> IntPolynomial:
    """Exact quotient ``num / den``; raises :class:`NotDivisible` on a remainder.

    The leading coefficient of ``den`` must divide every step, so monic (or
    unit-leading) divisors are the intended use.
    """
    if den.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero:
        return IntPolynomial()
    dn, dd = num.degree, den.degree
    if dn < dd:
        raise NotDivisible(f"deg {dn} < deg {dd}")
    lead = den.coeffs[-1]
    low = [(k, c) for k, c in den.terms() if k < dd]
    rem = list(num.coeffs)
    quot = [0] * (dn - dd + 1)
    for i in range(dn - dd, -1, -1):
        top = rem[i + dd]
        if not top:
            continue
        q, r = divmod(top, lead)
        if r:
            raise NotDivisible(f"leading coefficient {lead} does not divide {top}")
        quot[i] = q
        rem[i + dd] = 0
        for k, c in low:
            rem[i + k] -= q * c
    if any(rem[:dd]):
        raise NotDivisible("nonzero remainder")
    return IntPolynomial(tuple(quot))


@lru_cache(maxsize=None)
def divisors(m: int) -> tuple[int, ...]:
    """Positive divisors of ``m`` in ascending order."""
    if m < 1:
        raise ValueError(f"divisors of non-positive {m}")
    small, large = [], []
    i = 1
    while i * i <= m:
        if m % i == 0:
            small.append(i)
            if i * i != m:
                large.append(m // i)
        i += 1
    return tuple(small + large[::-1])


@lru_cache(maxsize=None)
def totient(m: int) -> int:
    """Euler's phi."""
    result, x, p = m, m, 2
    while p * p <= x:
        if x % p == 0:
            while x % p == 0:
                x //= p
            result -= result // p
        p += 1
    if x > 1:
        result -= result // x
    return result


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> IntPolynomial:
    """Phi_m, by dividing ``t**m - 1`` by Phi_e for every proper divisor e."""
    if m < 1:
        raise ValueError(f"cyclotomic index must be positive, got {m}")
    p = IntPolynomial.binomial(m)
    for e in divisors(m)[:-1]:
        p = poly_exact_div(p, cyclotomic_poly(e))
    return p


@dataclass(frozen=True)
class LambdaCombination:
    """Rational combination of the generators Lambda_k (Lambda_1 is the unit).

    ``terms`` holds ``(k, coefficient)`` sorted by ``k`` without zeros.
    """

    terms: tuple[tuple[int, Fraction], ...] = ()

    def __post_init__(self):
        acc: dict[int, Fraction] = {}
        for k, c in self.terms:
            if k < 1:
                raise ValueError(f"Lambda index must be positive, got {k}")
            acc[k] = acc.get(k, Fraction(0)) + Fraction(c)
        object.__setattr__(
            self, "terms", tuple(sorted((k, c) for k, c in acc.items() if c))
        )

    @classmethod
    def generator(cls, k: int, coeff=1) -> LambdaCombination:
        return cls(((k, Fraction(coeff)),))

    @classmethod
    def unit(cls) -> LambdaCombination:
        return cls.generator(1)

    @classmethod
    def from_mapping(cls, m: Mapping[int, object]) -> LambdaCombination:
        return cls(tuple((k, Fraction(c)) for k, c in m.items()))

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.terms)

    def __add__(self, other: LambdaCombination) -> LambdaCombination:
        return LambdaCombination(self.terms + other.terms)

    def __neg__(self) -> LambdaCombination:
        return LambdaCombination(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: LambdaCombination) -> LambdaCombination:
        return self + (-other)

    def __mul__(self, other) -> LambdaCombination:
        if isinstance(other, LambdaCombination):
            return lambda_mul(self, other)
        c = Fraction(other)
        return LambdaCombination(tuple((k, c * x) for k, x in self.terms))

    __rmul__ = __mul__

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*L{k}" for k, c in self.terms)


def lambda_mul(x: LambdaCombination, y: LambdaCombination) -> LambdaCombination:
    """Product under Lambda_a * Lambda_b = gcd(a, b) * Lambda_lcm(a, b)."""
    acc: dict[int, Fraction] = {}
    for a, ca in x.terms:
        for b, cb in y.terms:
            g = gcd(a, b)
            k = a // g * b
            acc[k] = acc.get(k, Fraction(0)) + g * ca * cb
    return LambdaCombination(tuple(acc.items()))


@dataclass(frozen=True)
class DivisorElement:
    """Multiplicities of the primitive m-th roots of unity, i.e. of Phi_m.

    ``multiplicities`` holds ``(m, mult)`` sorted by ``m`` without zeros.
    """

    multiplicities: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        acc: dict[int, int] = {}
        for m, k in self.multiplicities:
            if m < 1:
                raise ValueError(f"root-of-unity order must be positive, got {m}")
            if k != int(k):
                raise NotIntegral(f"multiplicity {k} of Phi_{m}")
            acc[m] = acc.get(m, 0) + int(k)
        object.__setattr__(
            self, "multiplicities", tuple(sorted((m, k) for m, k in acc.items() if k))
        )

    @classmethod
    def from_mapping(cls, m: Mapping[int, int]) -> DivisorElement:
        return cls(tuple(m.items()))

    def as_dict(self) -> dict[int, int]:
        return dict(self.multiplicities)

    def __getitem__(self, m: int) -> int:
        return self.as_dict().get(m, 0)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.multiplicities)

    @property
    def degree(self) -> int:
        """Degree of the polynomial it describes, ``sum(mult * phi(m))``."""
        return sum(k * totient(m) for m, k in self.multiplicities)

    def __str__(self) -> str:
        if not self.multiplicities:
            return "1"
        return "*".join(
            f"Phi{m}" if k == 1 else f"Phi{m}^{k}" for m, k in self.multiplicities
        )


def lambda_to_divisor(x: LambdaCombination) -> DivisorElement:
    """Expand each Lambda_k into the Phi_m with m | k."""
    acc: dict[int, Fraction] = {}
    for k, c in x.terms:
        for m in divisors(k):
            acc[m] = acc.get(m, Fraction(0)) + c
    bad = [(m, c) for m, c in acc.items() if c.denominator != 1]
    if bad:
        m, c = min(bad)
        raise NotIntegral(f"multiplicity {c} of Phi_{m}")
    return DivisorElement(tuple((m, int(c)) for m, c in acc.items()))


def divisor_to_poly(x: DivisorElement) -> IntPolynomial:
    """``prod Phi_m ** mult``."""
    result = IntPolynomial((1,))
    for m, k in x.multiplicities:
        if k < 0:
            raise NegativeMultiplicity(f"Phi_{m} has multiplicity {k}")
        result = result * cyclotomic_poly(m) ** k
    return result


def poly_product(factors: Iterable[IntPolynomial]) -> IntPolynomial:
    result = IntPolynomial((1,))
    for f in factors:
        result = result * f
    return result

"""Weight systems and the invariants computed from them.

A weight system ``(v_1, ..., v_n; d)`` is kept in the order it was given in,
because subset witnesses refer to variable positions. Equality up to
reordering and rescaling goes through :meth:`WeightSystem.canonical`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, prod

from .arith import (
    DivisorElement,
    IntPolynomial,
    LambdaCombination,
    NotDivisible,
    NotIntegral,
    lambda_to_divisor,
    poly_exact_div,
    totient,
)

__all__ = [
    "NegativeCoefficient",
    "NotPolynomial",
    "PreconditionViolated",
    "WeightSystem",
    "charpoly_milnor_orlik",
    "divisor_from_exponents",
    "exponents",
    "milnor_number",
    "monodromy_order",
    "normalized_weights",
    "poincare_series",
    "reduce",
]


class NotPolynomial(ArithmeticError):
    """The Poincare series is not a polynomial with integer coefficients."""


class NegativeCoefficient(ArithmeticError):
    """The Poincare series has a negative coefficient."""


class PreconditionViolated(ValueError):
    pass


@dataclass(frozen=True)
class WeightSystem:
    """Integer weights ``v`` and weighted degree ``d`` with ``0 < v_i < d``."""

    v: tuple[int, ...]
    d: int

    def __post_init__(self):
        v = tuple(int(x) for x in self.v)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "d", int(self.d))
        if not v:
            raise ValueError("a weight system needs at least one weight")
        if any(x <= 0 for x in v) or any(x >= self.d for x in v):
            raise ValueError(f"need 0 < v_i < d, got v={v}, d={self.d}")

    @property
    def n(self) -> int:
        return len(self.v)

    @property
    def is_reduced(self) -> bool:
        return gcd(*self.v, self.d) == 1

    @property
    def below_half(self) -> bool:
        """All ``v_i < d/2``."""
        return all(2 * x < self.d for x in self.v)

    def reduced(self) -> WeightSystem:
        g = gcd(*self.v, self.d)
        if g == 1:
            return self
        return WeightSystem(tuple(x // g for x in self.v), self.d // g)

    def sorted(self) -> WeightSystem:
        return WeightSystem(tuple(sorted(self.v)), self.d)

    def canonical(self) -> WeightSystem:
        """Reduced, with weights ascending; the dedupe key."""
        return self.reduced().sorted()

    def key(self) -> tuple:
        """Sort key: Milnor number first, then weights, then degree."""
        return (milnor_number(self), self.v, self.d)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.v)) + f"; {self.d})"


def reduce(ws: WeightSystem) -> WeightSystem:
    """Divide all weights and the degree by their gcd."""
    return ws.reduced()


def normalized_weights(ws: WeightSystem) -> tuple[Fraction, ...]:
    return tuple(Fraction(x, ws.d) for x in ws.v)


def milnor_number(ws: WeightSystem) -> Fraction:
    """``prod (d - v_i) / v_i`` as an exact rational.

    Integral whenever an isolated singularity exists, but returned as a
    Fraction so that invalid systems can still be inspected.
    """
    return Fraction(prod(ws.d - x for x in ws.v), prod(ws.v))


def poincare_series(ws: WeightSystem) -> IntPolynomial:
    """``prod (t^d - t^v_i) / (t^v_i - 1)``; raises :class:`NotPolynomial`."""
    num = IntPolynomial((1,))
    for x in ws.v:
        num = num * IntPolynomial.binomial(ws.d - x)
    try:
        for x in sorted(ws.v, reverse=True):
            num = poly_exact_div(num, IntPolynomial.binomial(x))
    except NotDivisible as exc:
        raise NotPolynomial(f"{ws}: Poincare series not in Z[t]") from exc
    shift = sum(ws.v)
    return IntPolynomial((0,) * shift + num.coeffs)


def exponents(ws: WeightSystem) -> tuple[Fraction, ...]:
    """Spectral numbers ``k/d`` repeated by the coefficient of ``t^k``.

    Sorted ascending; the length is the Milnor number.
    """
    rho = poincare_series(ws)
    out: list[Fraction] = []
    for k, c in rho.terms():
        if c < 0:
            raise NegativeCoefficient(f"{ws}: coefficient {c} at t^{k}")
        out.extend([Fraction(k, ws.d)] * c)
    return tuple(out)


def divisor_from_exponents(alphas) -> DivisorElement:
    """Group exponents by the order of ``exp(2 pi i alpha)``.

    Each order m must occur a multiple of phi(m) times.
    """
    counts = Counter(a.denominator for a in alphas)
    out = {}
    for m, c in counts.items():
        q, r = divmod(c, totient(m))
        if r:
            raise NotIntegral(f"order {m} occurs {c} times, phi({m}) = {totient(m)}")
        out[m] = q
    return DivisorElement.from_mapping(out)


def charpoly_milnor_orlik(ws: WeightSystem) -> DivisorElement:
    """Divisor of the monodromy characteristic polynomial.

    With ``v_i / d = s_i / t_i`` in lowest terms this is
    ``prod (Lambda_{t_i} / s_i - 1)``, expanded in ascending ``t_i``.
    """
    factors = sorted(
        (w.denominator, w.numerator) for w in normalized_weights(ws)
    )
    acc = LambdaCombination.unit()
    one = LambdaCombination.unit()
    for t, s in factors:
        acc = acc * (LambdaCombination.generator(t, Fraction(1, s)) - one)
    return lambda_to_divisor(acc)


def monodromy_order(ws: WeightSystem) -> int:
    """Order of the monodromy; equals ``d`` for reduced systems below ``d/2``."""
    if not ws.is_reduced:
        raise PreconditionViolated(f"{ws} is not reduced")
    if not ws.below_half:
        raise PreconditionViolated(f"{ws} has a weight >= d/2")
    return ws.d

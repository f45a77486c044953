"""Upper bounds for the weighted degree in terms of the Milnor number.

``l(n)`` is the product of ``p/(p-1)`` over the first ``n`` primes; a reduced
system below ``d/2`` in ``n >= 2`` variables has ``d <= l(n-1) * mu``.
The same machinery gives the lower bound for ``mu`` of a kappa graph that
prunes the enumeration.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import floor, isqrt, prod

from .weights import WeightSystem, milnor_number

__all__ = [
    "check_degree_bound",
    "d_max",
    "first_primes",
    "is_prime",
    "l",
    "l2",
    "milnor_lower_bound",
]

_primes: list[int] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
_lock = threading.Lock()


def _sieve(limit: int) -> list[int]:
    flags = bytearray([1]) * (limit + 1)
    flags[0:2] = b"\x00\x00"
    for p in range(2, isqrt(limit) + 1):
        if flags[p]:
            flags[p * p :: p] = bytearray(len(range(p * p, limit + 1, p)))
    return [i for i, f in enumerate(flags) if f]


def first_primes(n: int) -> list[int]:
    """The first ``n`` primes; the shared table only ever grows."""
    global _primes
    if n > len(_primes):
        with _lock:
            limit = max(2 * _primes[-1], 64)
            while True:
                found = _sieve(limit)
                if len(found) >= n:
                    break
                limit *= 2
            if len(found) > len(_primes):
                _primes = found
    return _primes[:n]


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    for p in range(3, isqrt(m) + 1, 2):
        if m % p == 0:
            return False
    return True


def l(n: int) -> Fraction:  # noqa: E743
    """``prod p/(p-1)`` over the first ``n`` primes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return prod((Fraction(p, p - 1) for p in first_primes(n)), start=Fraction(1))


def l2(n: int) -> Fraction:
    """``(3/2)(4/3) prod_{i=3..n} p_i/(p_i - 1)``, the bound with all b_i >= 3."""
    if n < 2:
        raise ValueError("l2 is defined for n >= 2")
    tail = first_primes(n)[2:]
    return prod((Fraction(p, p - 1) for p in tail), start=Fraction(2))


def check_degree_bound(ws: WeightSystem) -> bool:
    """``d <= l(n) mu``, and ``d <= l(n-1) mu`` when every ``v_i < d/2`` and n >= 2."""
    mu = milnor_number(ws)
    if ws.d > l(ws.n) * mu:
        return False
    if ws.n >= 2 and ws.below_half and ws.d > l(ws.n - 1) * mu:
        return False
    return True


def d_max(n: int, mu_max: int) -> int:
    """Largest degree a reduced system below ``d/2`` with ``mu <= mu_max`` can have."""
    factor = l(n - 1) if n >= 2 else l(n)
    return floor(factor * mu_max)


def milnor_lower_bound(kappa, a, comps=None) -> int:
    """Lower bound for ``mu`` of the weight system solved from ``(kappa, a)``.

    Needs ``a_j >= 2`` on every component with two or more vertices. Per
    component: ``prod a_j`` for a fixed point or a pure cycle; otherwise
    ``(prod_{cycle} a_j - (-1)^m) * prod_{inner} a_j * prod_{leaves} (a_j - 1)``.
    Nondecreasing in every ``a_j``.
    """
    if comps is None:
        from .graphs import components

        comps = components(tuple(kappa))
    bound = 1
    for comp in comps:
        cyc = prod(a[j] for j in comp.cycle)
        if comp.is_pure_cycle:
            bound *= cyc
            continue
        bound *= cyc - (-1) ** len(comp.cycle)
        for j in comp.tree_order:
            bound *= a[j] - 1 if j in comp.leaves else a[j]
    return bound

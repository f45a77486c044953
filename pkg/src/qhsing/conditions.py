"""Combinatorial criteria for an isolated singularity.

For a weight system and a support set ``R`` of exponent vectors of degree
``d`` the five quantifier conditions C1, C1', C2, C2', C3 are all
equivalent; every one of them is implemented literally so that the
equivalence can be tested. Subsets ``J`` are bitmasks over 0-based
variable positions; reports carry them as sorted index tuples.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .weights import WeightSystem

__all__ = [
    "Condition",
    "ConditionReport",
    "SupportSet",
    "check_condition",
    "check_gcd_condition",
    "is_IS2",
    "is_IS3",
    "semigroup_member",
]

MAX_VARIABLES = 16


class Condition(enum.Enum):
    C1 = "C1"
    C1_PRIME = "C1'"
    C2 = "C2"
    C2_PRIME = "C2'"
    C3 = "C3"


@dataclass(frozen=True)
class SupportSet:
    """Exponent vectors of degree ``d``; ``elements=None`` is the full support."""

    elements: frozenset[tuple[int, ...]] | None = None

    @classmethod
    def full(cls) -> SupportSet:
        return cls(None)

    @classmethod
    def of(cls, vectors) -> SupportSet:
        return cls(frozenset(tuple(int(a) for a in alpha) for alpha in vectors))

    @property
    def is_full(self) -> bool:
        return self.elements is None

    def validate(self, ws: WeightSystem) -> None:
        if self.elements is None:
            return
        for alpha in self.elements:
            if len(alpha) != ws.n or any(a < 0 for a in alpha):
                raise ValueError(f"{alpha} is not an exponent vector in {ws.n} variables")
            if sum(a * x for a, x in zip(alpha, ws.v)) != ws.d:
                raise ValueError(f"{alpha} does not have weighted degree {ws.d}")


@dataclass(frozen=True)
class ConditionReport:
    """Verdict plus, on failure, the first failing ``J`` (and ``I`` for C3)."""

    verdict: bool
    witness: tuple[int, ...] | None = None
    witness_i: tuple[int, ...] | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def describe(self) -> str:
        """Human-readable form with 1-based variable indices."""
        if self.verdict:
            return "true"
        text = "false (J={" + ",".join(str(j + 1) for j in self.witness) + "}"
        if self.witness_i is not None:
            text += ", I={" + ",".join(str(i + 1) for i in self.witness_i) + "}"
        return text + ")"


def _reachable(values: tuple[int, ...], limit: int) -> int:
    """Bitmask of the integers ``0..limit`` in the N0-span of ``values``.

    Unbounded-knapsack DP over ``0..limit`` with Python ints as bitsets:
    adding a generator v repeatedly doubles the stride until it passes limit.
    """
    mask = (1 << (limit + 1)) - 1
    bits = 1
    for v in set(values):
        step = v
        while step <= limit:
            bits |= (bits << step) & mask
            step <<= 1
    return bits


def semigroup_member(values, k: int) -> bool:
    """Whether ``k`` is a nonnegative integer combination of ``values``."""
    if k < 0:
        return False
    vals = tuple(int(v) for v in values if v <= k)
    if k == 0:
        return True
    if not vals:
        return False
    return bool(_reachable(vals, k) >> k & 1)


def _subsets_in_order(n: int, max_size: int | None = None):
    """Nonempty bitmasks ordered by size, then lexicographically by index tuple."""
    top = n if max_size is None else min(n, max_size)
    for size in range(1, top + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for j in combo:
                mask |= 1 << j
            yield mask, combo


class _Oracle:
    """Answers the two existence questions the conditions are built from.

    ``top(J)``: some alpha in R is supported in J.
    ``hit(J, k)``: some alpha in R_k is supported in J, i.e. some alpha in R
    has alpha_k >= 1 and alpha - e_k supported in J.
    Answers are cached per subset for the lifetime of one check.
    """

    def __init__(self, ws: WeightSystem, support: SupportSet):
        self.ws = ws
        self.n = ws.n
        self.support = support
        self._span: dict[int, int] = {}
        self._hits: dict[int, int] = {}
        self._top: dict[int, bool] = {}
        if not support.is_full:
            self._supp = [
                (alpha, sum(1 << i for i, a in enumerate(alpha) if a))
                for alpha in support.elements
            ]

    def _span_bits(self, mask: int) -> int:
        bits = self._span.get(mask)
        if bits is None:
            vals = tuple(self.ws.v[j] for j in range(self.n) if mask >> j & 1)
            bits = _reachable(vals, self.ws.d)
            self._span[mask] = bits
        return bits

    def top(self, mask: int) -> bool:
        hit = self._top.get(mask)
        if hit is None:
            if self.support.is_full:
                hit = bool(self._span_bits(mask) >> self.ws.d & 1)
            else:
                hit = any(s & ~mask == 0 for _, s in self._supp)
            self._top[mask] = hit
        return hit

    def hits(self, mask: int) -> int:
        """Bitmask of all k with ``hit(J, k)``."""
        out = self._hits.get(mask)
        if out is not None:
            return out
        out = 0
        if self.support.is_full:
            bits = self._span_bits(mask)
            for k, x in enumerate(self.ws.v):
                if bits >> (self.ws.d - x) & 1:
                    out |= 1 << k
        else:
            for alpha, s in self._supp:
                for k in range(self.n):
                    if alpha[k] == 0:
                        continue
                    rest = s if alpha[k] > 1 else s & ~(1 << k)
                    if rest & ~mask == 0:
                        out |= 1 << k
        self._hits[mask] = out
        return out


def _c1_holds(oracle: _Oracle, mask: int, size: int) -> bool:
    if oracle.top(mask):
        return True
    return (oracle.hits(mask) & ~mask).bit_count() >= size


def _c2_holds(oracle: _Oracle, mask: int, size: int) -> bool:
    return oracle.hits(mask).bit_count() >= size


def check_condition(
    ws: WeightSystem, support: SupportSet, which: Condition | str
) -> ConditionReport:
    """Evaluate one of C1, C1', C2, C2', C3 for ``ws`` and ``support``."""
    which = Condition(which)
    n = ws.n
    if n > MAX_VARIABLES:
        raise ValueError(f"at most {MAX_VARIABLES} variables supported, got {n}")
    support.validate(ws)
    oracle = _Oracle(ws, support)

    if which is Condition.C3:
        for jmask, jcombo in _subsets_in_order(n):
            hits = oracle.hits(jmask)
            for isize in range(len(jcombo)):
                for icombo in combinations(range(n), isize):
                    imask = sum(1 << i for i in icombo)
                    if hits & ~imask == 0:
                        return ConditionReport(False, jcombo, icombo)
        return ConditionReport(True)

    primed = which in (Condition.C1_PRIME, Condition.C2_PRIME)
    holds = _c1_holds if which in (Condition.C1, Condition.C1_PRIME) else _c2_holds
    max_size = (n + 1) // 2 if primed else None
    for mask, combo in _subsets_in_order(n, max_size):
        if not holds(oracle, mask, len(combo)):
            return ConditionReport(False, combo)
    return ConditionReport(True)


def is_IS3(ws: WeightSystem) -> bool:
    """Some quasihomogeneous polynomial of type ``ws`` has an isolated singularity."""
    return check_condition(ws, SupportSet.full(), Condition.C1_PRIME).verdict


def is_IS2(ws: WeightSystem, support: SupportSet) -> bool:
    """Some polynomial supported in ``support`` has an isolated singularity."""
    if support.is_full:
        raise ValueError("is_IS2 needs an explicit support set")
    return check_condition(ws, support, Condition.C2_PRIME).verdict


def check_gcd_condition(ws: WeightSystem) -> ConditionReport:
    """For every J, gcd(v_j : j in J) divides at least |J| of the d - v_k.

    Equivalent to the Poincare series lying in Z[t].
    """
    diffs = [ws.d - x for x in ws.v]
    for mask, combo in _subsets_in_order(ws.n):
        g = gcd(*(ws.v[j] for j in combo))
        if sum(1 for x in diffs if x % g == 0) < len(combo):
            return ConditionReport(False, combo)
    return ConditionReport(True)


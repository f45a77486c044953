"""Kappa maps, their types, and the weight systems they determine.

A kappa map picks for every variable ``j`` one monomial ``x_j^{a_j} x_{kappa(j)}``
(``x_j^{a_j+1}`` when ``kappa(j) == j``). Its type is the conjugacy class of
``kappa`` under relabelling, i.e. the isomorphism class of the functional
graph ``j -> kappa(j)``. Vertices are 0-based here.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import gcd, lcm, prod

from .conditions import SupportSet
from .weights import WeightSystem

__all__ = [
    "EvenCycleStatus",
    "FamilyOfSolutions",
    "InvalidExponents",
    "KappaGraph",
    "TypeClass",
    "enumerate_types",
    "is_fcc",
    "kappa_choices",
    "rho_chain",
    "solve_weights",
    "type_label",
    "type_of",
    "validate_even_cycles",
]


class FamilyOfSolutions(ValueError):
    """An even cycle with all exponents 1 leaves the weights undetermined."""


class InvalidExponents(ValueError):
    """No positive weight system carries these monomials."""


class EvenCycleStatus(enum.Enum):
    UNIQUE = "unique"
    FAMILY = "family"
    INVALID = "invalid"


def rho_chain(xs) -> int:
    """``x1...xk - x2...xk + ... + (-1)^(k-1) xk + (-1)^k``; 1 for ``()``."""
    acc = 1
    sign = 1
    for x in xs:
        sign = -sign
        acc = x * acc + sign
    return acc


# --- graph structure -------------------------------------------------------


@dataclass(frozen=True)
class Component:
    cycle: tuple[int, ...]  # kappa(cycle[i]) == cycle[i + 1]
    vertices: frozenset[int]
    tree_order: tuple[int, ...]  # non-cycle vertices, parents before children
    leaves: frozenset[int]

    @property
    def is_pure_cycle(self) -> bool:
        """No attached trees; fixed points count as 1-cycles."""
        return not self.tree_order


def _cycle_vertices(kappa: tuple[int, ...]) -> set[int]:
    n = len(kappa)
    on_cycle = set()
    for v in range(n):
        x = v
        for _ in range(n):
            x = kappa[x]
        on_cycle.add(x)
    # close under kappa: everything reached after n steps lies on a cycle
    todo = list(on_cycle)
    while todo:
        x = kappa[todo.pop()]
        if x not in on_cycle:
            on_cycle.add(x)
            todo.append(x)
    return on_cycle


@lru_cache(maxsize=4096)
def components(kappa: tuple[int, ...]) -> tuple[Component, ...]:
    n = len(kappa)
    on_cycle = _cycle_vertices(kappa)
    children: list[list[int]] = [[] for _ in range(n)]
    for j, k in enumerate(kappa):
        if j not in on_cycle:
            children[k].append(j)
    seen: set[int] = set()
    out = []
    for start in sorted(on_cycle):
        if start in seen:
            continue
        cyc = [start]
        x = kappa[start]
        while x != start:
            cyc.append(x)
            x = kappa[x]
        seen.update(cyc)
        order: list[int] = []
        frontier = list(cyc)
        while frontier:
            nxt = []
            for p in frontier:
                for c in children[p]:
                    order.append(c)
                    nxt.append(c)
            frontier = nxt
        leaves = frozenset(j for j in order if not children[j])
        out.append(Component(tuple(cyc), frozenset(cyc) | frozenset(order), tuple(order), leaves))
    return tuple(out)


def _tree_code(v: int, children: list[list[int]]) -> str:
    return "(" + "".join(sorted(_tree_code(c, children) for c in children[v])) + ")"


@lru_cache(maxsize=65536)
def _encode(kappa: tuple[int, ...]) -> str:
    """Canonical string of the functional graph; equal iff conjugate maps."""
    on_cycle = _cycle_vertices(kappa)
    children: list[list[int]] = [[] for _ in kappa]
    for j, k in enumerate(kappa):
        if j not in on_cycle:
            children[k].append(j)
    codes = []
    for comp in components(kappa):
        trees = [_tree_code(x, children) for x in comp.cycle]
        best = min("".join(trees[i:] + trees[:i]) for i in range(len(trees)))
        codes.append("[" + best + "]")
    return "".join(sorted(codes))


@dataclass(frozen=True, order=True)
class TypeClass:
    """Isomorphism class of a functional graph on ``n`` vertices."""

    n: int
    code: str
    representative: tuple[int, ...] = field(compare=False, default=())

    @property
    def label(self) -> str:
        return type_label(self)

    def __str__(self) -> str:
        return self.label


def type_of(kappa) -> TypeClass:
    kappa = tuple(kappa)
    return TypeClass(len(kappa), _encode(kappa), kappa)


# --- generating all types --------------------------------------------------


def _multisets(items, total):
    """Multisets of ``items`` (pairs ``(weight, obj)``) with weights summing to total."""

    def rec(start, remaining):
        if remaining == 0:
            yield ()
            return
        for i in range(start, len(items)):
            w, obj = items[i]
            if w <= remaining:
                for rest in rec(i, remaining - w):
                    yield (obj,) + rest

    return rec(0, total)


@lru_cache(maxsize=None)
def _rooted_trees(size: int) -> tuple[tuple, ...]:
    """Rooted unordered trees as nested tuples of children, one per iso class."""
    if size == 1:
        return ((),)
    smaller = [(s, t) for s in range(1, size) for t in _rooted_trees(s)]
    found = {}
    for forest in _multisets(smaller, size - 1):
        tree = tuple(sorted(forest, key=repr))
        found.setdefault(repr(tree), tree)
    return tuple(found[k] for k in sorted(found))


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def _connected_shapes(size: int):
    """Cycles of rooted trees of total ``size``; duplicates up to rotation allowed."""
    for c in range(1, size + 1):
        for sizes in _compositions(size, c):
            for trees in product(*(_rooted_trees(s) for s in sizes)):
                yield trees


def _build_kappa(shapes) -> tuple[int, ...]:
    kappa: list[int] = []

    def new_vertex(target):
        kappa.append(target)
        return len(kappa) - 1

    def attach(tree, parent):
        for child in tree:
            attach(child, new_vertex(parent))

    for cycle_trees in shapes:
        base = len(kappa)
        c = len(cycle_trees)
        for i in range(c):
            new_vertex(base + (i + 1) % c)
        for i, tree in enumerate(cycle_trees):
            attach(tree, base + i)
    return tuple(kappa)


@lru_cache(maxsize=None)
def enumerate_types(n: int) -> tuple[TypeClass, ...]:
    """All functional-graph types on ``n`` vertices, sorted by canonical code."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > 8:
        raise ValueError("type enumeration is limited to n <= 8")
    comps = []
    for size in range(1, n + 1):
        seen = set()
        for shape in _connected_shapes(size):
            kappa = _build_kappa((shape,))
            code = _encode(kappa)
            if code not in seen:
                seen.add(code)
                comps.append((size, shape))
    found: dict[str, tuple[int, ...]] = {}
    for combo in _multisets(comps, n):
        kappa = _build_kappa(combo)
        found.setdefault(_encode(kappa), kappa)
    return tuple(TypeClass(n, code, found[code]) for code in sorted(found))


# Roman-numeral names for n <= 4. n = 2, 3 follow the classical lists; for
# n = 4 the classes are pinned by FCC, even cycles and the failing subsets J,
# see README for the residual convention.
_ROMAN_REPRESENTATIVES: dict[int, dict[str, tuple[int, ...]]] = {
    1: {"I": (0,)},
    2: {"I": (0, 1), "II": (0, 0), "III": (1, 0)},
    3: {
        "I": (0, 1, 2),
        "II": (0, 0, 2),
        "III": (0, 0, 0),
        "IV": (1, 0, 2),
        "V": (0, 0, 1),
        "VI": (1, 0, 0),
        "VII": (1, 2, 0),
    },
    4: {
        "I": (0, 1, 2, 3),
        "II": (0, 0, 2, 3),
        "III": (1, 0, 2, 3),
        "IV": (0, 0, 1, 3),
        "V": (0, 1, 0, 0),
        "VI": (0, 0, 2, 2),
        "VII": (0, 0, 1, 2),
        "VIII": (1, 0, 2, 0),
        "IX": (1, 0, 2, 2),
        "X": (1, 2, 0, 3),
        "XI": (0, 0, 1, 1),
        "XII": (0, 0, 1, 0),
        "XIII": (0, 0, 0, 0),
        "XIV": (1, 0, 3, 2),
        "XV": (2, 0, 1, 0),
        "XVI": (1, 0, 1, 2),
        "XVII": (1, 0, 1, 0),
        "XVIII": (1, 2, 3, 0),
        "XIX": (1, 0, 0, 0),
    },
}


@lru_cache(maxsize=None)
def _labels(n: int) -> dict[str, str]:
    if n in _ROMAN_REPRESENTATIVES:
        return {_encode(k): name for name, k in _ROMAN_REPRESENTATIVES[n].items()}
    return {tc.code: f"n{n}.{i}" for i, tc in enumerate(enumerate_types(n), start=1)}


def type_label(tc: TypeClass) -> str:
    """Stable text name: Roman numerals for n <= 4, ``n<n>.<index>`` beyond."""
    return _labels(tc.n)[tc.code]


def roman_representatives(n: int) -> dict[str, tuple[int, ...]]:
    return dict(_ROMAN_REPRESENTATIVES[n])


# --- kappa graphs with exponents -------------------------------------------


@dataclass(frozen=True)
class KappaGraph:
    """A kappa map together with the exponents ``a_j`` of its monomials."""

    kappa: tuple[int, ...]
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "kappa", tuple(int(k) for k in self.kappa))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        n = len(self.kappa)
        if len(self.a) != n:
            raise ValueError("kappa and a must have the same length")
        if any(not 0 <= k < n for k in self.kappa):
            raise ValueError(f"kappa {self.kappa} is not a self-map of range({n})")
        if any(x < 1 for x in self.a):
            raise ValueError(f"exponents must be positive, got {self.a}")

    @property
    def n(self) -> int:
        return len(self.kappa)

    def type_class(self) -> TypeClass:
        return type_of(self.kappa)

    def components(self) -> tuple[Component, ...]:
        return components(self.kappa)

    def monomials(self) -> tuple[tuple[int, ...], ...]:
        """Exponent vectors ``a_j e_j + e_kappa(j)``, one per variable."""
        out = []
        for j, (k, x) in enumerate(zip(self.kappa, self.a)):
            alpha = [0] * self.n
            alpha[j] += x
            alpha[k] += 1
            out.append(tuple(alpha))
        return tuple(out)

    def support(self) -> SupportSet:
        return SupportSet.of(self.monomials())

    def is_chain(self) -> bool:
        return is_chain_map(self.kappa)

    def chain_exponents(self) -> tuple[int, ...]:
        """``(a_1, ..., a_n)`` read from the root up the chain."""
        if not self.is_chain():
            raise ValueError("not of chain type")
        order = chain_order(self.kappa)
        return tuple(self.a[j] for j in order)

    def __str__(self) -> str:
        parts = []
        for j, (k, x) in enumerate(zip(self.kappa, self.a)):
            parts.append(f"x{j + 1}^{x + 1}" if j == k else f"x{j + 1}^{x}*x{k + 1}")
        return " + ".join(parts)


def is_chain_map(kappa: tuple[int, ...]) -> bool:
    """One fixed point and a single path ending there."""
    n = len(kappa)
    roots = [j for j in range(n) if kappa[j] == j]
    if len(roots) != 1:
        return False
    indeg = [0] * n
    for j, k in enumerate(kappa):
        if j != k:
            indeg[k] += 1
    return all(x <= 1 for x in indeg) and len(components(kappa)) == 1


def chain_order(kappa: tuple[int, ...]) -> tuple[int, ...]:
    """Vertices of a chain from the root outwards."""
    root = next(j for j in range(len(kappa)) if kappa[j] == j)
    parent_of = {k: j for j, k in enumerate(kappa) if j != k}
    order = [root]
    while order[-1] in parent_of:
        order.append(parent_of[order[-1]])
    return tuple(order)


def is_fcc(g: KappaGraph | tuple[int, ...]) -> bool:
    """Sum of Fermat, cycle and chain pieces: no vertex has two incoming arrows."""
    kappa = g.kappa if isinstance(g, KappaGraph) else tuple(g)
    indeg = [0] * len(kappa)
    for j, k in enumerate(kappa):
        if j != k:
            indeg[k] += 1
            if indeg[k] > 1:
                return False
    return True


def validate_even_cycles(g: KappaGraph) -> EvenCycleStatus:
    status = EvenCycleStatus.UNIQUE
    for comp in g.components():
        cyc = comp.cycle
        if len(cyc) % 2:
            continue
        exps = [g.a[j] for j in cyc]
        odd_ones = all(x == 1 for x in exps[0::2])
        even_ones = all(x == 1 for x in exps[1::2])
        if odd_ones and even_ones:
            status = EvenCycleStatus.FAMILY
        elif odd_ones or even_ones:
            return EvenCycleStatus.INVALID
    return status


def _solve_normalized(kappa, a, comps) -> list[tuple[int, int]]:
    """Weights ``w_j = s_j / t_j`` (lowest terms) with ``a_j w_j + w_kappa(j) = 1``."""
    n = len(kappa)
    st: list[tuple[int, int]] = [(0, 1)] * n
    for comp in comps:
        cyc = comp.cycle
        m = len(cyc)
        exps = [a[j] for j in cyc]
        den = prod(exps) - (-1) ** m
        if den == 0:
            raise FamilyOfSolutions(f"even cycle {cyc} with all exponents 1")
        for i, j in enumerate(cyc):
            num = rho_chain(exps[i + 1:] + exps[:i])
            if num <= 0:
                raise InvalidExponents(f"cycle {cyc} with exponents {exps}")
            g = gcd(num, den)
            st[j] = (num // g, den // g)
        for j in comp.tree_order:
            s, t = st[kappa[j]]
            num, den2 = t - s, t * a[j]
            g = gcd(num, den2)
            st[j] = (num // g, den2 // g)
    return st


def solve_weights(g: KappaGraph) -> WeightSystem:
    """The reduced weight system carrying all monomials of ``g``.

    Vertex order is kept. Raises :class:`FamilyOfSolutions` when an even cycle
    has all exponents 1 and :class:`InvalidExponents` when no positive
    solution exists.
    """
    status = validate_even_cycles(g)
    if status is EvenCycleStatus.INVALID:
        raise InvalidExponents(f"{g}: an even cycle violates both EC1 and EC2")
    if status is EvenCycleStatus.FAMILY:
        raise FamilyOfSolutions(f"{g}: weights only determined up to a family")
    st = _solve_normalized(g.kappa, g.a, g.components())
    d = lcm(*(t for _, t in st))
    return WeightSystem(tuple(s * (d // t) for s, t in st), d)


def normalized_solution(g: KappaGraph) -> tuple[Fraction, ...]:
    ws = solve_weights(g)
    return tuple(Fraction(x, ws.d) for x in ws.v)


def kappa_choices(ws: WeightSystem) -> list[KappaGraph]:
    """Every kappa map whose monomials all have weighted degree ``d``.

    For each ``j`` the admissible targets are the ``k`` with
    ``v_j | d - v_k``, and then ``a_j = (d - v_k) / v_j``.
    """
    cands = []
    for vj in ws.v:
        row = [(k, (ws.d - vk) // vj) for k, vk in enumerate(ws.v) if (ws.d - vk) % vj == 0]
        if not row:
            return []
        cands.append(row)
    out = []
    for pick in product(*cands):
        out.append(KappaGraph(tuple(k for k, _ in pick), tuple(x for _, x in pick)))
    return out

"""Complete lists of weight systems up to a Milnor-number bound.

Every reduced system with all ``v_i < d/2`` that admits an isolated
singularity carries, for some kappa map, the monomials ``x_j^{a_j} x_kappa(j)``
with all ``a_j >= 2``, and the weights are determined by ``(kappa, a)``. So
the search runs over types and exponent vectors, pruned by
:func:`qhsing.bounds.milnor_lower_bound`, and keeps the solved systems that
pass the full-support test. :func:`brute_force_enumerate` scans ``(v, d)``
directly and exists to cross-check that argument.
"""

from __future__ import annotations

import json
import logging
import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from math import gcd, lcm, prod
from pathlib import Path

from . import __version__
from .arith import DivisorElement, totient
from .bounds import d_max, is_prime, milnor_lower_bound
from .conditions import Condition, SupportSet, check_condition
from .graphs import (
    _solve_normalized,
    chain_order,
    components,
    enumerate_types,
    is_chain_map,
    kappa_choices,
    rho_chain,
    type_of,
)
from .weights import WeightSystem, charpoly_milnor_orlik, milnor_number

__all__ = [
    "BudgetExceeded",
    "EnumerationRecord",
    "GapReport",
    "PrimeAudit",
    "brute_force_enumerate",
    "chain_charpoly",
    "chain_weight_system",
    "classify_prime_mu",
    "enumerate_weight_systems",
    "find_gaps",
    "one_third_pairing",
    "sophie_germain_gap_set",
]

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 200_000_000


class BudgetExceeded(RuntimeError):
    """The search visited more nodes than allowed."""


@dataclass(frozen=True)
class EnumerationRecord:
    ws: WeightSystem
    mu: int
    kappa_types: tuple[str, ...]
    charpoly: DivisorElement

    @property
    def n(self) -> int:
        return self.ws.n

    def sort_key(self) -> tuple:
        return (self.mu, self.ws.v, self.ws.d)


def make_record(ws: WeightSystem) -> EnumerationRecord:
    mu = milnor_number(ws)
    if mu.denominator != 1:
        raise ValueError(f"{ws} has non-integral Milnor number {mu}")
    labels = sorted({type_of(g.kappa).label for g in kappa_choices(ws)}, key=_roman_key)
    return EnumerationRecord(ws, int(mu), tuple(labels), charpoly_milnor_orlik(ws))


_ROMAN = {"I": 1, "V": 5, "X": 10}


def _roman_key(label: str):
    if label and all(c in _ROMAN for c in label):
        total = 0
        for i, c in enumerate(label):
            v = _ROMAN[c]
            total += -v if i + 1 < len(label) and _ROMAN[label[i + 1]] > v else v
        return (0, total, label)
    head, _, tail = label.rpartition(".")
    if tail.isdigit():
        return (1, int(tail), head)
    return (2, 0, label)


# --- graph-driven search ---------------------------------------------------


def _is_is3(v: tuple[int, ...], d: int, cache: dict) -> bool:
    key = (v, d)
    hit = cache.get(key)
    if hit is None:
        hit = check_condition(WeightSystem(v, d), SupportSet.full(), Condition.C1_PRIME).verdict
        cache[key] = hit
    return hit


def _search_type(kappa: tuple[int, ...], mu_max: int, budget: int, is3_cache: dict):
    """All canonical ``(v, d, mu)`` generated by one type.

    Returns ``(systems, nodes)``.
    """
    n = len(kappa)
    comps = components(kappa)
    order: list[int] = []
    for comp in comps:
        order.extend(comp.cycle)
    for comp in comps:
        order.extend(j for j in comp.tree_order if j not in comp.leaves)
    for comp in comps:
        order.extend(j for j in comp.tree_order if j in comp.leaves)
    cap = mu_max + 1
    a = [2] * n
    found: dict[tuple, int] = {}
    nodes = 0

    def leaf():
        st = _solve_normalized(kappa, a, comps)
        num = prod(t - s for s, t in st)
        den = prod(s for s, _ in st)
        if num > mu_max * den or num % den:
            return
        d = lcm(*(t for _, t in st))
        v = tuple(sorted(s * (d // t) for s, t in st))
        if (v, d) in found:
            return
        if any(2 * x >= d for x in v):
            return
        if _is_is3(v, d, is3_cache):
            found[(v, d)] = num // den

    def descend(depth):
        nonlocal nodes
        if depth == n:
            leaf()
            return
        j = order[depth]
        for x in range(2, cap + 1):
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(f"node budget {budget} exhausted")
            a[j] = x
            if milnor_lower_bound(kappa, a, comps) > mu_max:
                break
            descend(depth + 1)
        a[j] = 2

    descend(0)
    return [(v, d, mu) for (v, d), mu in found.items()], nodes


def _worker(args):
    kappa, mu_max, budget = args
    return _search_type(kappa, mu_max, budget, {})


class _ShardCache:
    """One JSON file per type index, invalidated by package version."""

    def __init__(self, root: Path, n: int, mu_max: int, n_types: int):
        self.dir = Path(root) / f"n{n}_mu{mu_max}"
        self.dir.mkdir(parents=True, exist_ok=True)
        manifest = self.dir / "manifest.json"
        want = {"version": __version__, "n": n, "mu_max": mu_max, "types": n_types}
        if manifest.exists():
            try:
                have = json.loads(manifest.read_text())
            except ValueError:
                have = None
            if have != want:
                for p in self.dir.glob("type*.json"):
                    p.unlink()
        self._write(manifest, want)

    @staticmethod
    def _write(path: Path, obj) -> None:
        tmp = path.with_suffix(".tmp")
        tmp.write_text(json.dumps(obj, sort_keys=True))
        os.replace(tmp, path)

    def _path(self, idx: int) -> Path:
        return self.dir / f"type{idx:04d}.json"

    def load(self, idx: int):
        p = self._path(idx)
        if not p.exists():
            return None
        data = json.loads(p.read_text())
        return [(tuple(v), d, mu) for v, d, mu in data["systems"]], data["nodes"]

    def store(self, idx: int, systems, nodes: int) -> None:
        rows = sorted([list(v), d, mu] for v, d, mu in systems)
        self._write(self._path(idx), {"systems": rows, "nodes": nodes})


def search(
    n: int,
    mu_max: int,
    *,
    jobs: int = 1,
    budget: int | None = None,
    cache_dir: str | os.PathLike | None = None,
) -> dict[tuple[tuple[int, ...], int], int]:
    """Canonical ``(v, d) -> mu`` for every system found; no per-record extras."""
    if n < 1:
        raise ValueError("n must be positive")
    if mu_max < 1:
        return {}
    budget = DEFAULT_BUDGET if budget is None else budget
    types = enumerate_types(n)
    cache = _ShardCache(cache_dir, n, mu_max, len(types)) if cache_dir else None
    results: dict[int, tuple] = {}
    todo = []
    for idx, tc in enumerate(types):
        hit = cache.load(idx) if cache else None
        if hit is not None:
            results[idx] = hit
        else:
            todo.append(idx)
    if jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            args = [(types[i].representative, mu_max, budget) for i in todo]
            for idx, res in zip(todo, pool.map(_worker, args)):
                results[idx] = res
                if cache:
                    cache.store(idx, *res)
    else:
        is3_cache: dict = {}
        for idx in todo:
            res = _search_type(types[idx].representative, mu_max, budget, is3_cache)
            results[idx] = res
            if cache:
                cache.store(idx, *res)
    total_nodes = sum(res[1] for res in results.values())
    if total_nodes > budget:
        raise BudgetExceeded(f"{total_nodes} nodes exceed budget {budget}")
    log.debug("n=%d mu_max=%d: %d search nodes", n, mu_max, total_nodes)
    merged: dict[tuple[tuple[int, ...], int], int] = {}
    for idx in sorted(results):
        for v, d, mu in results[idx][0]:
            merged[(v, d)] = mu
    return merged


def enumerate_weight_systems(
    n: int,
    mu_max: int,
    *,
    jobs: int = 1,
    budget: int | None = None,
    cache_dir: str | os.PathLike | None = None,
    include_a1: bool = False,
) -> list[EnumerationRecord]:
    """All reduced systems with ``v_i < d/2``, an isolated singularity and ``mu <= mu_max``.

    Sorted by ``mu``, then weights, then degree. ``include_a1`` adds the
    ``A_1`` system ``(1; 2)`` for ``n = 1`` only.
    """
    found = search(n, mu_max, jobs=jobs, budget=budget, cache_dir=cache_dir)
    records = [make_record(WeightSystem(v, d)) for (v, d) in found]
    if include_a1 and n == 1 and mu_max >= 1:
        records.append(make_record(WeightSystem((1,), 2)))
    records.sort(key=EnumerationRecord.sort_key)
    return records


def brute_force_enumerate(n: int, mu_max: int, *, include_a1: bool = False) -> list[EnumerationRecord]:
    """Direct scan over all ``d <= l(n-1) mu_max`` and sorted ``v``; the oracle."""
    if not 1 <= n <= 3:
        raise ValueError("brute force is limited to n <= 3")
    if mu_max > 60:
        raise ValueError("brute force is limited to mu_max <= 60")
    out = []
    for d in range(2, d_max(n, mu_max) + 1):
        half = (d - 1) // 2
        for v in combinations_with_replacement(range(1, half + 1), n):
            if gcd(*v, d) != 1:
                continue
            num = prod(d - x for x in v)
            den = prod(v)
            if num % den or num // den > mu_max:
                continue
            ws = WeightSystem(v, d)
            if check_condition(ws, SupportSet.full(), Condition.C1_PRIME).verdict:
                out.append(make_record(ws))
    if include_a1 and n == 1 and mu_max >= 1:
        out.append(make_record(WeightSystem((1,), 2)))
    out.sort(key=EnumerationRecord.sort_key)
    return out


# --- gaps ------------------------------------------------------------------


def _sg_predicate(n: int, m: int) -> bool:
    """``m = 2p + (-1)^n`` with ``p`` and ``m`` prime."""
    p2 = m - (-1) ** n
    return p2 % 2 == 0 and is_prime(m) and is_prime(p2 // 2)


@dataclass(frozen=True)
class GapReport:
    n: int
    mu_max: int
    gaps: tuple[int, ...]
    sophie_germain: frozenset[int] = field(default_factory=frozenset)

    @property
    def low(self) -> int:
        return 2**self.n

    def is_sophie_germain_type(self, g: int) -> bool:
        return g in self.sophie_germain


def find_gaps(n: int, mu_max: int, *, jobs: int = 1, budget: int | None = None,
              cache_dir=None) -> GapReport:
    """Integers in ``(2^n, mu_max]`` that are not Milnor numbers of any system below d/2."""
    found = search(n, mu_max, jobs=jobs, budget=budget, cache_dir=cache_dir)
    mus = set(found.values())
    gaps = tuple(m for m in range(2**n + 1, mu_max + 1) if m not in mus)
    sg = frozenset(g for g in gaps if _sg_predicate(n, g))
    return GapReport(n, mu_max, gaps, sg)


def sophie_germain_gap_set(n: int, mu_max: int) -> set[int]:
    """``{2p + (-1)^n : p and 2p + (-1)^n prime, 2^n < 2p + (-1)^n <= mu_max}``."""
    if n < 3:
        raise ValueError("the prime-pair gap family needs n >= 3")
    return {m for m in range(2**n + 1, mu_max + 1) if _sg_predicate(n, m)}


# --- chain type ------------------------------------------------------------


def _chain_t(a) -> list[int]:
    """``t_0 = 1, t_i = a_i ... a_2 (a_1 + 1)``."""
    t = [1, a[0] + 1]
    for x in a[1:]:
        t.append(t[-1] * x)
    return t


def chain_weight_system(a) -> WeightSystem:
    """Reduced weights of ``x_1^{a_1+1} + x_2^{a_2} x_1 + ... + x_n^{a_n} x_{n-1}``.

    Returned in chain order (root first); ``.canonical()`` sorts it.
    """
    a = tuple(int(x) for x in a)
    if not a or any(x < 2 for x in a):
        raise ValueError(f"chain exponents must be >= 2, got {a}")
    t = _chain_t(a)[1:]
    head = (a[0] + 1,) + a[1:]
    s = [rho_chain(tuple(reversed(head[:i]))) for i in range(len(a))]
    d = t[-1]
    return WeightSystem(tuple(si * (d // ti) for si, ti in zip(s, t)), d).reduced()


def chain_charpoly(a) -> DivisorElement:
    """Phi_m for every ``m | t_n`` whose first index ``i`` in ``0..n`` with
    ``m | t_i`` has the parity of ``n``."""
    a = tuple(int(x) for x in a)
    if not a or any(x < 2 for x in a):
        raise ValueError(f"chain exponents must be >= 2, got {a}")
    t = _chain_t(a)
    n = len(a)
    out = {}
    from .arith import divisors

    for m in divisors(t[-1]):
        first = next(i for i, ti in enumerate(t) if ti % m == 0)
        if first % 2 == n % 2:
            out[m] = 1
    return DivisorElement.from_mapping(out)


@dataclass
class PrimeAudit:
    n: int
    mu_max: int
    chains: dict[int, list[tuple[int, ...]]]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def classify_prime_mu(n: int, mu_max: int, records=None, **kw) -> PrimeAudit:
    """Check every prime Milnor number: one kappa choice, chain type, simple eigenvalues."""
    if records is None:
        records = enumerate_weight_systems(n, mu_max, **kw)
    chains: dict[int, list[tuple[int, ...]]] = defaultdict(list)
    bad: list[str] = []
    for rec in records:
        if not is_prime(rec.mu):
            continue
        choices = kappa_choices(rec.ws)
        if len(choices) != 1:
            bad.append(f"{rec.ws}: {len(choices)} kappa choices")
            continue
        g = choices[0]
        if not is_chain_map(g.kappa):
            bad.append(f"{rec.ws}: kappa {g.kappa} is not a chain")
            continue
        tup = tuple(g.a[j] for j in chain_order(g.kappa))
        chains[rec.mu].append(tup)
        if chain_weight_system(tup).canonical() != rec.ws:
            bad.append(f"{rec.ws}: chain formula gives {chain_weight_system(tup)}")
        if any(k != 1 for _, k in rec.charpoly):
            bad.append(f"{rec.ws}: repeated eigenvalue in {rec.charpoly}")
        if chain_charpoly(tup) != rec.charpoly:
            bad.append(f"{rec.ws}: chain charpoly {chain_charpoly(tup)} != {rec.charpoly}")
    for mu in chains:
        chains[mu].sort(key=lambda t: tuple(-x for x in t))
    return PrimeAudit(n, mu_max, dict(chains), bad)


# --- audits ----------------------------------------------------------------


def one_third_pairing(ws: WeightSystem) -> dict[int, int] | None:
    """An injective ``nu`` from ``{i : v_i > d/3}`` to ``{i : v_i < d/3}`` with
    ``v_nu(i) = d - 2 v_i``, or None if there is none."""
    big = [i for i, x in enumerate(ws.v) if 3 * x > ws.d]
    small = [i for i, x in enumerate(ws.v) if 3 * x < ws.d]
    for image in permutations(small, len(big)):
        if all(ws.v[k] == ws.d - 2 * ws.v[i] for i, k in zip(big, image)):
            return dict(zip(big, image))
    return None


def charpoly_degree_matches(rec: EnumerationRecord) -> bool:
    return sum(k * totient(m) for m, k in rec.charpoly) == rec.mu


def sum_weights_eq_d(ws: WeightSystem) -> bool:
    return sum(ws.v) == ws.d


def sum_weights_eq_half_d(ws: WeightSystem) -> bool:
    return 2 * sum(ws.v) == ws.d

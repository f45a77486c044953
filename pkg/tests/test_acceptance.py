"""Acceptance checks, one test per published figure.

Every check records a PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary, so ``pytest -v`` output shows the whole table at once.
Slow rows are marked ``slow`` and run with ``pytest -m slow``.
"""

import random
from fractions import Fraction

import pytest

from qhsing.bounds import check_degree_bound, is_prime, l, l2
from qhsing.conditions import Condition, SupportSet, check_condition, check_gcd_condition, is_IS3
from qhsing.enumeration import (
    chain_charpoly,
    classify_prime_mu,
    enumerate_weight_systems,
    find_gaps,
    search,
    sum_weights_eq_d,
    sum_weights_eq_half_d,
)
from qhsing.graphs import enumerate_types, kappa_choices
from qhsing.weights import (
    WeightSystem,
    charpoly_milnor_orlik,
    divisor_from_exponents,
    exponents,
    poincare_series,
)

from .conftest import record


def verdict(label, expected, got):
    ok = expected == got
    record(ok, label, f"expected {expected}, got {got}")
    assert got == expected


# --- 1: small count rows ---------------------------------------------------

SMALL_ROWS = [(2, 50, 187), (2, 100, 493), (2, 150, 847), (3, 50, 217), (3, 100, 806),
              (4, 50, 100), (4, 100, 570)]


@pytest.mark.parametrize("n,mu,count", SMALL_ROWS)
def test_count_small(n, mu, count):
    verdict(f"[1] count n={n} mu<={mu}", count, len(search(n, mu)))


# --- 2: medium count rows --------------------------------------------------

MEDIUM_ROWS = [(2, 500, 3957), (3, 200, 2623), (3, 500, 10931), (4, 150, 1442), (4, 300, 6059)]


@pytest.mark.slow
@pytest.mark.parametrize("n,mu,count", MEDIUM_ROWS)
def test_count_medium(n, mu, count):
    verdict(f"[2] count n={n} mu<={mu}", count, len(search(n, mu)))


# --- 3: gap lists ------------------------------------------------------------

GAPS3 = (9, 13, 37, 61, 73, 157, 193, 277, 313, 397, 421,
         457, 541, 613, 661, 673, 733, 757, 877, 997)
GAPS4 = (17, 18, 19, 23, 27, 47, 59, 74, 83, 107, 167, 179,
         219, 227, 263, 314, 347, 359, 383, 467, 479)


def test_gap_prefixes():
    verdict("[3] gaps n=3 mu<=100", tuple(g for g in GAPS3 if g <= 100), find_gaps(3, 100).gaps)
    verdict("[3] gaps n=4 mu<=100", tuple(g for g in GAPS4 if g <= 100), find_gaps(4, 100).gaps)
    verdict("[3] gaps n=2 mu<=100", (), find_gaps(2, 100).gaps)


@pytest.mark.slow
def test_gaps_full():
    verdict("[3] gaps n=3 mu<=1000", GAPS3, find_gaps(3, 1000).gaps)
    verdict("[3] gaps n=4 mu<=500", GAPS4, find_gaps(4, 500).gaps)
    verdict("[3] gaps n=2 mu<=1000", (), find_gaps(2, 1000).gaps)


# --- 4: type counts ----------------------------------------------------------


@pytest.mark.parametrize("n,count", [(2, 3), (3, 7), (4, 19), (5, 47), (6, 128)])
def test_type_counts(n, count):
    verdict(f"[4] types n={n}", count, len(enumerate_types(n)))


# --- 5: prime Milnor number tables ------------------------------------------

PRIME_TABLE_2 = {
    5: [(3, 2)],
    7: [(5, 2), (2, 3)],
    11: [(9, 2), (4, 3)],
    13: [(11, 2), (5, 3), (3, 4), (2, 5)],
    17: [(15, 2), (7, 3), (3, 5)],
    19: [(17, 2), (8, 3), (5, 4), (2, 7)],
    23: [(21, 2), (10, 3)],
}
PRIME_TABLE_3 = {
    11: [(3, 2, 2), (2, 3, 2)],
    17: [(5, 2, 2), (2, 5, 2)],
    19: [(4, 3, 2), (3, 4, 2), (3, 2, 3)],
    23: [(7, 2, 2), (5, 3, 2), (3, 5, 2), (2, 7, 2)],
}


def test_prime_tables():
    two = classify_prime_mu(2, 31).chains
    three = classify_prime_mu(3, 31).chains
    four = classify_prime_mu(4, 31).chains
    verdict("[5] prime table n=2 mu<=23", PRIME_TABLE_2, {p: two[p] for p in two if p <= 23})
    verdict("[5] prime table n=3 mu<=23", PRIME_TABLE_3, {p: three[p] for p in three if p <= 23})
    verdict("[5] prime table n=4 mu<=31", {29: [(3, 2, 3, 2)], 31: [(5, 2, 2, 2)]}, four)
    verdict("[5] tuple counts mu=29,31 n=2,3", (4, 6, 6, 2),
            (len(two[29]), len(three[29]), len(two[31]), len(three[31])))


# --- 6: prime Milnor numbers are chains --------------------------------------


@pytest.mark.parametrize("n,mu", [(2, 300), (3, 200), (4, 100)])
def test_prime_audit(n, mu):
    recs = enumerate_weight_systems(n, mu)
    audit = classify_prime_mu(n, mu, records=recs)
    bad = list(audit.violations)
    for r in recs:
        if not is_prime(r.mu):
            continue
        [g] = kappa_choices(r.ws) or [None]
        if g is None or chain_charpoly(g.chain_exponents()) != charpoly_milnor_orlik(r.ws):
            bad.append(str(r.ws))
    verdict(f"[6] prime-mu violations n={n} mu<={mu}", [], bad)


# --- 7: a system passing the gcd test only ---------------------------------


def test_gcd_only_system():
    ws = WeightSystem((1, 33, 58, 24), 265)
    rep = check_condition(ws, SupportSet.full(), Condition.C1)
    rho = poincare_series(ws)
    got = (rep.verdict, rep.describe(), is_IS3(ws), check_gcd_condition(ws).verdict,
           all(c >= 0 for _, c in rho.terms()))
    verdict("[7] gcd-only system (IS3, witness, GCD, rho>=0)",
            (False, "false (J={2,4})", False, True, True), got)


# --- 8: five equivalent conditions -------------------------------------------


def _monomials(v, d, limit=300):
    out = []

    def rec(i, rest, acc):
        if len(out) >= limit:
            return
        if i == len(v):
            if rest == 0:
                out.append(tuple(acc))
            return
        for a in range(rest // v[i] + 1):
            rec(i + 1, rest - a * v[i], acc + [a])

    rec(0, d, [])
    return out


def test_condition_equivalence():
    rnd = random.Random(20240601)
    disagreements = 0
    positives = 0
    for _ in range(10_000):
        n = rnd.randint(1, 4)
        d = rnd.randint(2, 40)
        v = tuple(rnd.randint(1, d - 1) for _ in range(n))
        ws = WeightSystem(v, d)
        mons = _monomials(v, d)
        if rnd.random() < 0.3:
            R = SupportSet.of(mons)
        else:
            R = SupportSet.of(rnd.sample(mons, min(len(mons), rnd.randint(0, 2 * n + 2))))
        got = {check_condition(ws, R, c).verdict for c in Condition}
        disagreements += len(got) > 1
        positives += got == {True}
    record(positives > 0, "[8] condition instances with a positive verdict", str(positives))
    verdict("[8] condition disagreements over 10000 instances", 0, disagreements)


# --- 9: three variables ------------------------------------------------------


def test_three_variable_gcd():
    rnd = random.Random(7)
    tested = mismatches = 0
    while tested < 5000:
        n = rnd.randint(1, 3)
        d = rnd.randint(2, 60)
        ws = WeightSystem(tuple(rnd.randint(1, d - 1) for _ in range(n)), d)
        if not ws.is_reduced:
            continue
        tested += 1
        mismatches += is_IS3(ws) != check_gcd_condition(ws).verdict
    verdict("[9] IS3 vs GCD mismatches over 5000 systems, n<=3", 0, mismatches)


# --- 10: two routes to the characteristic polynomial --------------------------


def test_charpoly_routes():
    recs = enumerate_weight_systems(3, 200)
    bad = [r.ws for r in recs if divisor_from_exponents(exponents(r.ws)) != r.charpoly]
    verdict(f"[10] charpoly mismatches over {len(recs)} records n=3 mu<=200", [], bad)


# --- 11: degree bound --------------------------------------------------------


def test_degree_bound():
    bad = []
    for n, mu in [(2, 300), (3, 200), (4, 150)]:
        for (v, d), m in search(n, mu).items():
            if Fraction(d) > l(n - 1) * m or not check_degree_bound(WeightSystem(v, d)):
                bad.append((v, d))
    verdict("[11] degree-bound violations", [], bad)
    verdict("[11] l2(n+1) <= l(n), n = 2..12", True, all(l2(n + 1) <= l(n) for n in range(2, 13)))


# --- 12: graph search versus direct scan -------------------------------------


@pytest.mark.parametrize("n,mu", [(1, 30), (2, 30), (3, 25)])
def test_oracle(n, mu):
    from qhsing.enumeration import brute_force_enumerate

    fast = {(r.ws, r.mu) for r in enumerate_weight_systems(n, mu)}
    slow = {(r.ws, r.mu) for r in brute_force_enumerate(n, mu)}
    verdict(f"[12] symmetric difference with direct scan n={n} mu<={mu}", set(), fast ^ slow)


# --- 13: weights summing to d or d/2 ---------------------------------------


@pytest.mark.slow
def test_weight_sum_filters():
    three = [r for r in enumerate_weight_systems(3, 500) if sum_weights_eq_half_d(r.ws)]
    four = [r for r in enumerate_weight_systems(4, 300) if sum_weights_eq_d(r.ws)]
    verdict("[13] n=3 systems with sum v = d/2", 48, len(three))
    verdict("[13] n=4 systems with sum v = d", 47, len(four))
    verdict("[13] mu range n=3", (125, 492), (min(r.mu for r in three), max(r.mu for r in three)))
    verdict("[13] mu range n=4", (81, 264), (min(r.mu for r in four), max(r.mu for r in four)))
    ends = (three[0].ws, three[-1].ws, four[0].ws, four[-1].ws)
    verdict("[13] extreme systems", (WeightSystem((1, 1, 1), 6), WeightSystem((1, 6, 14), 42),
                                     WeightSystem((1, 1, 1, 1), 4), WeightSystem((1, 3, 7, 10), 21)),
            ends)


@pytest.mark.slow
def test_widest_degree():
    found = search(4, 500)
    (v, d), mu = max(found.items(), key=lambda kv: kv[0][1])
    # the published mu for this system is 473; the product formula gives 472
    verdict("[13] largest d for n=4 mu<=500", ((30, 348, 580, 855), 1740, 472), (v, d, mu))

"""Weight systems of quasihomogeneous isolated singularities.

Exact arithmetic throughout: integers, :class:`fractions.Fraction`, and dense
integer polynomials.
"""

__version__ = "0.1.0"

from .arith import (
    DivisorElement,
    IntPolynomial,
    LambdaCombination,
    cyclotomic_poly,
    divisor_to_poly,
    lambda_mul,
    lambda_to_divisor,
    poly_exact_div,
)
from .bounds import check_degree_bound, l, l2
from .conditions import (
    Condition,
    SupportSet,
    check_condition,
    check_gcd_condition,
    is_IS2,
    is_IS3,
    semigroup_member,
)
from .enumeration import (
    BudgetExceeded,
    EnumerationRecord,
    brute_force_enumerate,
    chain_charpoly,
    chain_weight_system,
    classify_prime_mu,
    enumerate_weight_systems,
    find_gaps,
    sophie_germain_gap_set,
)
from .graphs import (
    KappaGraph,
    TypeClass,
    enumerate_types,
    is_fcc,
    kappa_choices,
    rho_chain,
    solve_weights,
    validate_even_cycles,
)
from .weights import (
    WeightSystem,
    charpoly_milnor_orlik,
    exponents,
    milnor_number,
    monodromy_order,
    poincare_series,
)

__all__ = [
    "brute_force_enumerate",
    "BudgetExceeded",
    "chain_charpoly",
    "chain_weight_system",
    "charpoly_milnor_orlik",
    "check_condition",
    "check_degree_bound",
    "check_gcd_condition",
    "classify_prime_mu",
    "Condition",
    "cyclotomic_poly",
    "divisor_to_poly",
    "DivisorElement",
    "enumerate_types",
    "enumerate_weight_systems",
    "EnumerationRecord",
    "exponents",
    "find_gaps",
    "IntPolynomial",
    "is_fcc",
    "is_IS2",
    "is_IS3",
    "kappa_choices",
    "KappaGraph",
    "l",
    "l2",
    "lambda_mul",
    "lambda_to_divisor",
    "LambdaCombination",
    "milnor_number",
    "monodromy_order",
    "poincare_series",
    "poly_exact_div",
    "rho_chain",
    "semigroup_member",
    "solve_weights",
    "sophie_germain_gap_set",
    "SupportSet",
    "TypeClass",
    "validate_even_cycles",
    "WeightSystem",
]

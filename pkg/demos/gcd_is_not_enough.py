"""A weight system that passes every numerical test but has no isolated singularity.

Run: python demos/gcd_is_not_enough.py
"""

from qhsing import (
    Condition,
    SupportSet,
    WeightSystem,
    check_condition,
    check_gcd_condition,
    milnor_number,
    poincare_series,
)

ws = WeightSystem((1, 33, 58, 24), 265)
print("weight system", ws)

# The formal Milnor number is an integer ...
print("mu =", milnor_number(ws))

# ... the Poincare series is a polynomial with nonnegative coefficients ...
rho = poincare_series(ws)
print("rho has", sum(1 for _ in rho.terms()), "nonzero terms, smallest coefficient",
      min(c for _, c in rho.terms()))

# ... and every gcd test passes.
print("gcd test:", check_gcd_condition(ws).describe())

# The semigroup test fails: no monomial of degree 265 lives on x2, x4 alone,
# and only one variable can be paired with a monomial in x2, x4.
for cond in Condition:
    print(f"{cond.value:>3}:", check_condition(ws, SupportSet.full(), cond).describe())

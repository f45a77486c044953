"""Prime Milnor numbers come only from chains x1^(a1+1) + x2^a2 x1 + ... .

Run: python demos/prime_chains.py
"""

from qhsing import chain_charpoly, chain_weight_system, classify_prime_mu, milnor_number

for n, mu_max in [(2, 31), (3, 31), (4, 31)]:
    audit = classify_prime_mu(n, mu_max)
    print(f"n={n}: {'no violations' if audit.ok else audit.violations}")
    for mu in sorted(audit.chains):
        print(f"  mu={mu:>3}:", ", ".join(map(str, audit.chains[mu])))

# Closed forms for one chain
a = (5, 2, 2, 2)
ws = chain_weight_system(a)
print(f"\nchain {a}: weights {ws}, mu={milnor_number(ws)}, charpoly {chain_charpoly(a)}")

"""Count weight systems below d/2 and list the Milnor numbers that never occur.

Run: python demos/count_table.py [mu_max]
"""

import sys
import time

from qhsing.enumeration import find_gaps, search, sophie_germain_gap_set

mu_max = int(sys.argv[1]) if len(sys.argv) > 1 else 200

print(f"{'mu<=':>6} {'n=2':>7} {'n=3':>7} {'n=4':>7}")
for mu in range(50, mu_max + 1, 50):
    counts = [len(search(n, mu)) for n in (2, 3, 4)]
    print(f"{mu:>6} " + " ".join(f"{c:>7}" for c in counts))

for n in (3, 4):
    t0 = time.perf_counter()
    rep = find_gaps(n, mu_max)
    explained = sophie_germain_gap_set(n, mu_max)
    marks = [f"{g}*" if g in explained else str(g) for g in rep.gaps]
    print(f"\nn={n} gaps up to {mu_max} ({time.perf_counter() - t0:.1f}s):")
    print("  " + ", ".join(marks))
print("\n* = 2p + (-1)^n with p and the gap both prime")

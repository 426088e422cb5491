"""Print the classification for a range of primes as one table.

usage: python3 scripts/census_table.py [pmax]
"""
import sys

from sympy import primerange

from primegenus.census import check_classification, classify

pmax = int(sys.argv[1]) if len(sys.argv) > 1 else 43

for p in primerange(7, pmax + 1):
    recs = classify(p)
    bad = check_classification(p, recs)
    print(f"p={p}  genus {p + 1}  {'ok' if not bad else 'MISMATCH'}")
    for r in recs:
        print(f"  ({r.case_id:>4}) rho={r.rho:<3} {r.sig.short():<12} {r.group_spec:<16} "
              f"{r.kernel_count:>5} kernels  {r.surface_count_description}")
    for line in bad:
        print("  !", line)

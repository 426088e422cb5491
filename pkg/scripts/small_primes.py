"""Brute-force census at p = 5 over the candidate pool, with restriction checks."""
from primegenus.census import check_small_prime, classify_small_prime, nonorientable_census

recs = classify_small_prime(5)
for r in recs:
    print(f"({r.case_id:>4}) rho={r.rho:<3} {r.sig.short():<12} {r.group_spec:<14} {r.kernel_count:>4} kernels  "
          + "; ".join(r.notes))
problems = check_small_prime(5, recs)
print("restrictions and action counts:", "ok" if not problems else problems)
for n in nonorientable_census(5):
    print(f"non-orientable quotient of {n.base.conder_ref}: {n.conder_ref}, Petrie length {n.petrie}")

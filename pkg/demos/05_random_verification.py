"""
A seeded randomized verification run
====================================

"""

from hodgespec import verify

spec = verify.TrialSpec(seed=1, trials=10, nv=(8, 10))
reports = verify.run_suite(spec)
print(verify.format_summary(reports))
print("proven checks all pass:", verify.suite_ok(reports))

# any failure here is the Det part of complexity monotonicity, which has
# genuine counterexamples (see 04_invariants.py); trace and det(L+1) hold
for r in reports:
    if r.status == verify.FAIL:
        print(r.check, r.label, "trial", r.trial, "Det:", r.details["pseudo_det"])

"""
Running the verification harness
================================

Every identity check returns reports.  The same suites are exposed on the command
line as ``lukas-vcf verify``.
"""

from lukas_vcf.harness import SUITES, SuiteConfig, run_suite

print("suites:", ", ".join(SUITES))

# %%
# Symbolic run of the resolvent relations.
for r in run_suite("theorem-A", SuiteConfig(p=2, N=8, mode="symbolic")):
    print(r)

# %%
# Three seeded numeric tables.
reports = run_suite("theorem-W", SuiteConfig(p=3, N=8, mode="numeric", seed=0, tables=3))
print(sum(r.ok for r in reports), "of", len(reports), "passed")

# %%
# A negative control: bump one coefficient of A_0 and watch the location come back.
for r in run_suite("theorem-A", SuiteConfig(p=2, N=8, mode="numeric", seed=7, tamper=(0, 5))):
    if not r.ok:
        print(r)

#!/usr/bin/env python3
"""Running the closed-form copositivity criteria on small tensors.

A criterion either certifies (sometimes with a branch), refutes (only the
exact order-3 dim-2 test can), or says unknown.  Every certificate lists
each inequality with its computed value, so a verdict can be audited line
by line.
"""

from copos import aggregate, build, certify_all

def show(title, tensor):
    print(f"== {title} ==")
    certs = certify_all(tensor)
    for cert in certs:
        head = f"{cert.criterion_id}: {cert.outcome.value}"
        if cert.branch is not None:
            head += f"  [branch {cert.branch}]"
        print(" ", head)
    print("  aggregate:", aggregate(certs).value)
    print()


# the exact test refutes this one: at x = (1/2, 1/2) the form is negative
show("refuted cubic", build(3, 2, {(1, 1, 1): 1.0, (1, 2, 2): -1.0,
                                   (2, 2, 2): 1.0}))

# boundary of the square-root test: both thresholds hold with equality
show("boundary cubic", build(3, 2, {(1, 1, 1): 1.0, (1, 1, 2): -1.0 / 3.0,
                                    (1, 2, 2): -1.0 / 3.0, (2, 2, 2): 1.0}))

# order 4, dim 3: the sum-of-squares route certifies despite a negative entry
show("quartic with a negative mixed entry",
     build(4, 3, {(1, 1, 1, 1): 1.0, (2, 2, 2, 2): 1.0, (3, 3, 3, 3): 1.0,
                  (1, 2, 3, 3): -1.0 / 27.0}))

# a full audit trail for one criterion
t = build(3, 2, {(1, 1, 1): 4.0, (1, 2, 2): -1.0, (2, 2, 2): 1.0})
cert = [c for c in certify_all(t) if c.criterion_id == "thm3.1"][0]
print("== audit of thm3.1 on the discriminant-zero instance ==")
for row in cert.conditions:
    mark = "ok  " if row.satisfied else "FAIL"
    print(f"  [{mark}] {row.description}  value={row.value}")
print("  outcome:", cert.outcome.value, "branch:", cert.branch)

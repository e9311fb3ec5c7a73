"""The triangle group (3,3) and theta functions.

Q and R are built from theta_2, theta_3 with coefficients in Q(sqrt(-3));
they are Galois conjugate, multiply to E4, and satisfy a system with three
weight-2 generators.  The auxiliary "hat" system is satisfied by Q + R and
QR; with the half sum (Q + R)/2 it fails, which the report shows.
"""

from rrcsys.catalog import s33_forms, verify_33
from rrcsys.coeff import sqrt
from rrcsys.rrc import rescale, solve_q

forms = s33_forms(10)
for name in ("P", "Q", "R"):
    print(f"{name} =", forms[name].format(max_terms=6))

report = verify_33(60)
for key in sorted(report):
    print(f"{key:26s} {report[key]}")

# The hypergeometric solution matches after the nome change q -> 48 sqrt(-3) q.
sol = rescale(solve_q(3, 3, 20), 48 * sqrt(-3))
f = s33_forms(20)
print("\nsolve_q(3,3) rescaled by 48*sqrt(-3) matches:",
      sol.P == f["P"] and sol.Q == f["Q"] and sol.R == f["R"])

"""Rankin-Cohen brackets, on q-series and symbolically.

The symbolic bracket uses the Serre derivation of C[E4, E6] and
Phi = -E4/144; evaluating the result agrees with the q-series bracket.
"""

from rrcsys.brackets import canonical_bracket, identity_suite, rc_bracket
from rrcsys.catalog import delta, eisenstein
from rrcsys.graded import Derivation, GradedSpec

ORDER = 30
Q, R, D = eisenstein(4, ORDER).series, eisenstein(6, ORDER).series, delta(ORDER).series


def theta(f):
    return f.theta()


print("[Delta, E4]_1 == -4 E6 Delta:   ", rc_bracket(D, 12, Q, 4, 1, theta) == -4 * R * D)
print("[Delta, Delta]_2 == -13 E4 Delta^2:", rc_bracket(D, 12, D, 12, 2, theta) == -13 * Q * D * D)
print("[Delta, E6]_1 == -6 E4^2 Delta:  ", rc_bracket(D, 12, R, 6, 1, theta) == -6 * Q * Q * D)

spec = GradedSpec([("Q", 4), ("R", 6)])
Qs, Rs = spec.gens()
serre = Derivation(spec, [-Rs / 3, -Qs * Qs / 2])
Phi = -Qs / 144
Delta = (Qs ** 3 - Rs ** 2) / 1728
for n in range(4):
    b = canonical_bracket(Delta, 12, Qs, 4, n, serre.apply, Phi)
    agree = b.evaluate({"Q": Q, "R": R}) == rc_bracket(D, 12, Q, 4, n, theta)
    print(f"[Delta, Q]_{n} = {b}    (matches q-series: {agree})")

report = identity_suite([(Q, 4), (R, 6), (D, 12)],
                        lambda f, k, g, l, n: rc_bracket(f, k, g, l, n, theta),
                        max_n=3, labels=["E4", "E6", "Delta"])
print(f"\nidentity suite: {report.checks} checks, ok = {report.ok}")

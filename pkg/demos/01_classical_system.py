"""The classical system for (E2/12, E4, E6).

We build the q-expansions from divisor sums, check that the three
equations hold exactly with D = q d/dq, and then recover the same series
from the hypergeometric side: the Frobenius nome of F(1/12, 5/12; 1; z),
rescaled by 1728, reproduces E4 and E6.
"""

from rrcsys.catalog import eisenstein, verify_ramanujan
from rrcsys.rrc import rescale, rescale_constant, solve_q

ORDER = 12

E2, E4, E6 = (eisenstein(k, ORDER).series for k in (2, 4, 6))
print("E2 =", E2.format(max_terms=5))
print("E4 =", E4.format(max_terms=5))
print("E6 =", E6.format(max_terms=5))

report = verify_ramanujan(200)
print("\nresiduals of the classical system to order 200:", report)

# The same system, solved from the hypergeometric equation.
sol = solve_q(2, 3, ORDER)
print("\nQ in the Frobenius nome:", sol.Q.format(max_terms=4))
c = rescale_constant(sol.Q, E4)
print("nome rescaling constant:", c)
scaled = rescale(sol, c)
print("P == E2/12:", scaled.P == E2 / 12)
print("Q == E4:   ", scaled.Q == E4)
print("R == E6:   ", scaled.R == E6)

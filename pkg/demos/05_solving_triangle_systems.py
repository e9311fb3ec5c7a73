"""Series solutions of triangle-group systems in the Hauptmodul z.

For every signature we solve in z with D = y^2 d/dz, check the residuals,
and verify the inversion identities F^2 = Q^(N/n) and the cross identity
relating the second embedding to the first.
"""

from rrcsys.rrc import build_system, ohyama_roundtrip, solve_z, verify_inversion, verify_system
from rrcsys.triangle import TriangleSignature, candidate_embeddings

for sig in candidate_embeddings(2, 5):
    print(f"system for {sig}:")
    print("  " + str(build_system(sig).D).replace("\n", "\n  "))
    sol = solve_z(sig, 20)
    print("  Q =", sol.Q.format(var="z", max_terms=4))
    print("  residuals:", verify_system(sol))
    print("  inversion:", verify_inversion(sig, 20))

print("\nOhyama round trip for (2,5,1,2):", ohyama_roundtrip(TriangleSignature(2, 5, 1, 2), 20))

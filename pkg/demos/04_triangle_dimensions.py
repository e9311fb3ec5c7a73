"""Signatures, dimensions and multipliers for Delta(n, m, infinity).

Each group has one or more embedding signatures (n, m, k, r); the first one
carries the full ring of modular forms, generated by Q and R.
"""

from rrcsys.triangle import (SHIPPED_GROUPS, candidate_embeddings, dims_table,
                             generator_weights, multipliers)

for n, m in SHIPPED_GROUPS:
    sigs = candidate_embeddings(n, m)
    print(f"Delta({n},{m},inf):", ", ".join(f"{s} N={s.N}" for s in sigs))

sig = candidate_embeddings(2, 3)[0]
print("\nweights of Q, R for (2,3):", [str(w) for w in generator_weights(sig)])
print("dimensions for k = 0..24:",
      [row["dim"] for row in dims_table(sig, 24) if int(row["w"]) % 2 == 0])

sig = candidate_embeddings(3, 3)[0]
print("\n(3,3) multiplier rotations of Q, R:", [str(x) for x in multipliers(sig)])
for row in dims_table(sig, 6):
    print(f"  w={row['w']:>4}  dim={row['dim']}  basis={row['basis']}  "
          f"rotations={row['rotations']}")

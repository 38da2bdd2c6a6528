import pandas as pd

import gcdegen as gd

lam = gd.HighestWeight.from_string("2,1,0")
patterns = gd.enumerate_patterns(lam)

# one row per lattice point of the polytope, one column per free entry
frame = pd.DataFrame([p.free_entries() for p in patterns], columns=["l12", "l13", "l22"])
print(frame)
assert len(patterns) == gd.weyl_dim(lam)

# psi turns a pattern into exponents, greedy_decompose splits them into Plücker indices
for p in patterns:
    sets = gd.greedy_decompose(p)
    print(p.rows, "->", [str(I) for I in sets])
    assert gd.phi(gd.psi(p)) == p

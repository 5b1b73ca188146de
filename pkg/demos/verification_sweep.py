"""Exhaustive checks at small rank, and what happens one rank further.

The default range (n <= 4, |lambda| <= 6, at most 5 parts for the axiom
check) is clean.  At n = 5 the octagon classification stops covering every
deviation, and the witnesses are printed so they can be replayed.
"""
import time

from kfpoly.verify import (
    check_stembridge,
    replay,
    sweep_consistency,
    sweep_graph_checks,
)

start = time.perf_counter()
for n in (2, 3, 4):
    print(sweep_consistency(n, 6).summary())
    print(check_stembridge(n, 5).summary())

names = ["braid", "conj_hexagon_bd", "conj_propagation", "cayley", "psi"]
for rep in sweep_graph_checks(names, (2, 3, 4), 6).values():
    print(rep.summary())
print(f"default range done in {time.perf_counter() - start:.2f}s\n")

# one step up in rank
rep = check_stembridge(5, 4)
print(rep.summary())
for w in rep.counterexamples[:3]:
    x = " + ".join(f"{m if m > 1 else ''}({i},{j})" for (i, j), m in w["partition"])
    print(f"  {w['axiom']} at {x}, (i,j)={tuple(w['indices'])}, "
          f"vanishing e-words {w['observed']['simple_zero']}, replay -> {replay('stembridge', w)}")

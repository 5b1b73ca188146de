"""K_{(2,2,0,0),(1,1,1,1)}(t) four ways.

Run with ``python demos/worked_example.py``.
"""
from kfpoly import build_S, kf_admissible, kf_alternating, kf_charge, kf_positive
from kfpoly.kostant import render_tableau_notation, signed_size_sum

lam, mu, n = (2, 2, 0, 0), (1, 1, 1, 1), 4

# Every (w, a) with a summing to w(lam+rho) - (mu+rho).
terms = build_S(lam, mu, n)
print(f"S has {len(terms)} signed terms:")
for t in terms:
    sign = "+" if t.sign > 0 else "-"
    print(f"  {sign} t^{len(t.part)}   {t}")

# Cancelling the signs gives the alternating formula.
print("\nsigned sum:", signed_size_sum(terms))

# The same polynomial from the other three constructions.
print("alternating:", kf_alternating(lam, mu, n))
print("involution: ", kf_positive(lam, mu, n))
print("admissible: ", kf_admissible(lam, mu, n))
print("charge:     ", kf_charge((2, 2), mu))

# Tableau notation: row i lists j for each root (i, j).
a = terms[0].part
print(f"\n{a} in tableau notation:")
print(render_tableau_notation(a))

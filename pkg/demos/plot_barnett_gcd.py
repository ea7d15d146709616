"""
The degree of a gcd from one matrix rank
========================================

Stack the Bezout matrices of P with each Q_j; the rank deficit is the
degree of gcd(P, Q_1, ..., Q_k).
"""

from quatroots.bezout import barnett_stack, exact_rank, gcd_degree_barnett
from quatroots.poly import RealPoly, euclid_gcd

x = RealPoly.t()
c = (x - 1) * (x**2 + 2)  # planted common factor

P = c * (x**3 - x + 5)
Qs = [c * (x + 3), c * (x**2 - 7), RealPoly()]

B = barnett_stack(P, Qs)
print(B.rows, "x", B.cols, "matrix of rank", exact_rank(B))
print("degree from the rank:", gcd_degree_barnett(P, Qs))
print("Euclid:", euclid_gcd([P, *Qs]))

"""
Both roots of a quadratic with a complex root
=============================================

For t^2 - (1+2i+j)t + (i-1-k) the complex root i comes out of the
factorization Q = (t - p)(t - q), and the second root is a conjugate of p.
"""

from quatroots import parse_poly, solve_quadratic_complex_case
from quatroots.errors import ConditionFails
from quatroots.poly import qpoly_eval

Q = parse_poly("t^2 - (1+2i+j)*t + (i-1-k)")
s = solve_quadratic_complex_case(Q)
print("q     =", s.q)
print("p     =", s.p)
print("sigma =", s.sigma)
print("Q(sigma) =", qpoly_eval(Q, s.sigma))

# sigma and p lie in the same class
print(s.sigma.x0 == s.p.x0, s.sigma.norm_sq() == s.p.norm_sq())

# without a complex root the condition fails and we say so
try:
    solve_quadratic_complex_case(parse_poly("t^2 + 1 + k"))
except ConditionFails as exc:
    print("no complex root:", exc)

"""
Root bounds and integer roots
=============================

Every root lies strictly inside the ball of radius 1 + H(Q), so the
integer roots can be listed by a finite search.
"""

from quatroots import enumerate_integer_roots, heights, parse_poly, root_bounds
from quatroots.analysis import comparison_bound

Q = parse_poly("(t^2 + 2t + 5)*(t - (1 + i + j + k))")
h = heights(Q)
b = root_bounds(Q)
print("H(Q)^2 =", h.h_q_sq, " radius", b.general)
print("coefficient-sum bound", comparison_bound(Q))

# the real quadratic contributes the sphere of -1 + 2u, u a unit imaginary;
# its integer points are -1 +- 2i, -1 +- 2j, -1 +- 2k
for q in enumerate_integer_roots(Q):
    print(q)

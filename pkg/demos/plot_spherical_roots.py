"""
Spherical roots come from real factors
======================================

(t^2 + 1)(t - k) vanishes on the whole sphere of unit imaginary quaternions.
"""

from quatroots import classify, parse_poly
from quatroots.poly import qpoly_eval
from quatroots.scalar import Quaternion

r = classify(parse_poly("(t^2 + 1)*(t - k)"))
(cls,) = r.spherical_classes
print("class: Re =", cls.re, " |Im|^2 =", cls.imag_norm_sq)

# any unit imaginary quaternion is a root; try a few
for q in (Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)):
    print(q, "->", qpoly_eval(r.monic_input, q))

# a rational point on the sphere that is neither i, j nor k
from fractions import Fraction as F
q = Quaternion(0, F(2, 3), F(1, 3), F(2, 3))
print(q, "->", qpoly_eval(r.monic_input, q))

# an irrational class is still found, but only approximately
r = classify(parse_poly("(t^4 + t^2 + 3)*(t - j)"))
for c in r.spherical_classes:
    print(float(c.re), float(c.imag_norm_sq), "exact" if c.exact else "approximate")

"""
A quaternion quadratic with one isolated complex root
======================================================

(t - j)(t - i) expands to t^2 - (i+j)t - k.  Its only root is i.
"""

from quatroots import classify, parse_poly
from quatroots.poly import format_poly

Q = parse_poly("(t - j)*(t - i)")
print(format_poly(Q))

r = classify(Q)

# E is the largest complex right factor, D the largest real one
print("E =", format_poly(r.E), "  D =", format_poly(r.D))
print("rank Bez(f, g) =", r.rank_bez_fg, "  rank of the Barnett stack =", r.rank_barnett)

# E has degree 1 and D is constant, so the root of E is isolated
for z in r.isolated_complex_roots:
    print("isolated root:", z.exact)

# the other order of the factors gives a different polynomial
print(format_poly(parse_poly("(t - i)*(t - j)")))

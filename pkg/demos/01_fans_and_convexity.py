#!/usr/bin/env python3
"""Fans from rays and primitive collections, and the convexity criterion.

A smooth complete fan is given here by its primitive ray generators plus its
primitive collections (the minimal sets of rays spanning no cone).  Maximal
cones are derived, and a height vector h determines a piecewise-linear
support function taking -h[i] at ray i.  Convexity of that function is a
finite check: one inequality per primitive collection.
"""

from idplab import build_fan, find_cone, find_convexity_violation, is_convex, \
    is_strictly_convex, is_splitting, support_value

print("== The projective plane fan ==")
fan = build_fan([(1, 0), (0, 1), (-1, -1)], [(0, 1, 2)])
print("rays:", fan.rays)
print("maximal cones (ray index pairs):", fan.maximal_cones)

h = (1, 1, 1)  # the triangle conv{(-1,-1), (2,-1), (-1,2)}
print(f"h = {h}: convex = {is_convex(fan, h)}, strictly = {is_strictly_convex(fan, h)}")
print("support function at (1, 1):", support_value(fan, h, (1, 1)))

# (0,0,-1) fails: the collection inequality needs h0 + h1 + h2 >= 0
bad = (0, 0, -1)
print(f"h = {bad}: violating collection = {find_convexity_violation(fan, bad)}")

print()
print("== A product of two lines (splitting fan) ==")
lines = build_fan([(1, 0), (-1, 0), (0, 1), (0, -1)], [(0, 1), (2, 3)])
print("collections are disjoint, so splitting:", is_splitting(lines))
print("h = (2, 0, 1, 0) cuts out the rectangle [-2,0] x [-1,0];",
      "convex =", is_convex(lines, (2, 0, 1, 0)))

print()
print("== Locating vectors in cones ==")
for u in [(3, 1), (-2, 5), (0, -4)]:
    k, coeffs = find_cone(lines, u)
    rays = [lines.rays[i] for i in lines.maximal_cones[k]]
    print(f"{u} = " + " + ".join(f"{c}*{r}" for c, r in zip(coeffs, rays) if c))

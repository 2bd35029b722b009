#!/usr/bin/env python3
"""Exact polytopes, Minkowski sums, and the integer decomposition property.

P(A, h) = {x : Ax >= -h}.  Adding height vectors adds polytopes (Minkowski),
so the IDP question "does every lattice point of P + Q split as a lattice
point of P plus one of Q?" is a finite, exact computation.
"""

from idplab import LatticePolytope, add_heights, build_fan, idp_check, \
    minkowski_sum_points

print("== Two segments whose sum square traps an interior point ==")
p = LatticePolytope.from_points([(1, 0), (2, 1)])
q = LatticePolytope.from_points([(1, 0), (0, 1)])
print("P points:", p.lattice_points())
print("Q points:", q.lattice_points())
print("pairwise sums:", minkowski_sum_points(p.lattice_points(), q.lattice_points()))
result = idp_check(p, q)
print("IDP holds?", result.ok, "- unreachable points:", result.witnesses)
print("(the center of the tilted square is a lattice point of P+Q,")
print(" but neither segment contributes a summand for it)")

print()
print("== Fan-backed polytopes: heights add, polytopes add ==")
fan = build_fan([(1, 0), (0, 1), (-1, -1)], [(0, 1, 2)])
h, h2 = (0, 0, 2), (0, 0, 3)
P = LatticePolytope(fan, h)
Q = LatticePolytope(fan, h2)
S = LatticePolytope(fan, add_heights(h, h2))
print("P is the dilated triangle with vertices", P.vertices())
print("Q is the dilated triangle with vertices", Q.vertices())
print("P + Q has", len(S.lattice_points()), "lattice points; sumset size:",
      len(minkowski_sum_points(P.lattice_points(), Q.lattice_points())))
print("IDP on the pair:", idp_check(P, Q).ok)

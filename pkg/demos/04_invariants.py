"""
Exact invariants: pseudo determinants, trees and torsion
========================================================

"""

from hodgespec import whitney_complex, closure, subset, hodge_blocks, pseudo_det, analytic_torsion
from hodgespec.spectral import hodge_pseudo_det, hodge_forest_det

# Kirchhoff: Det(L_0) = n * (number of spanning trees); K4 has 16 trees
K4 = whitney_complex((range(4), [(i, j) for i in range(4) for j in range(i + 1, 4)]))
print("Det L_0(K4) =", pseudo_det(hodge_blocks(K4)[0]))

# torsion from block determinants agrees with the super pseudo determinant
for name, G in [("triangle", closure([[1, 2, 3]])), ("circle", closure([[1, 2], [2, 3], [3, 4], [4, 1]]))]:
    t = analytic_torsion(G)
    print(name, "torsion", t.value, "super pdet", t.super_pdet)

# Det is not monotone under passing to a subcomplex: this tree loses an edge
# and the two resulting trees (2 and 3 vertices) have Det 6 * 6 = 36 > 25
T = whitney_complex((range(5), [(0, 4), (1, 3), (2, 3), (3, 4)]))
F = subset(T, [[0], [1], [2], [3], [4], [0, 4], [1, 3], [2, 3]])
print("Det(T) =", hodge_pseudo_det(T), "Det(F) =", hodge_pseudo_det(F))
print("det(L+1):", hodge_forest_det(T), ">=", hodge_forest_det(F))

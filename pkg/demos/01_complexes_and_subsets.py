"""
Complexes, stars, open and closed sets
======================================

"""

from hodgespec import closure, whitney_complex, star, complement, random_open_set, is_open, is_closed
from hodgespec.complex_core import euler_characteristic

# the circle as the closure of four edges
G = closure([[1, 2], [2, 3], [3, 4], [4, 1]])
print(G.elements)
print("f =", G.f_vector, "chi =", euler_characteristic(G))

# the same complex from the 4-cycle graph: every clique becomes a simplex
C4 = whitney_complex(([1, 2, 3, 4], [(1, 2), (2, 3), (3, 4), (4, 1)]))
print("Whitney complex equal:", C4 == G)

# the star of a vertex is open; its complement is a subcomplex
U = star(G, [1])
K = complement(G, U)
print("U(1) =", U.elements, is_open(G, U))
print("G - U(1) =", K.elements, is_closed(G, K))

# a union of three random stars, reproducible from the seed
print(random_open_set(G, 3, seed=7).elements)

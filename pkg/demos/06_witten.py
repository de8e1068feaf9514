"""
Witten deformation keeps the Betti numbers
==========================================

"""

import numpy as np

from hodgespec import closure, betti_exact, witten_hodge, eigenvalues_sym

G = closure([[0, 1, 2], [2, 3], [3, 4], [4, 0]])
g = np.random.default_rng(0).normal(size=len(G))
print("b =", betti_exact(G))
for s in (0.0, 0.5, 2.0):
    Ls = witten_hodge(G, g, s)
    print(f"s={s}: kernel dims", tuple(eigenvalues_sym(B).nullity for B in Ls.blocks))

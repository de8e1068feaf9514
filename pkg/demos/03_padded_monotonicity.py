"""
Left-padded spectra of open and closed parts
============================================

"""

import numpy as np

from hodgespec import closure, subset, complement, hodge_spectrum, pad_left, betti_exact

G = closure([[1, 2], [2, 3], [3, 4], [4, 1]])
U = subset(G, [[3], [4], [2, 3], [3, 4], [1, 4]], kind="open")
K = complement(G, U)

n = len(G)
sg = hodge_spectrum(G).values
sk = pad_left(hodge_spectrum(K), n).values
su = pad_left(hodge_spectrum(U), n).values
np.set_printoptions(precision=4, suppress=True)
print("sigma(G)      ", sg)
print("padded sigma(K)", sk)
print("padded sigma(U)", su)
print("G-K", sg - sk)
print("G-U", sg - su)

# Betti vectors of the two parts add up to at least that of G
print("b(U) =", betti_exact(U), "b(K) =", betti_exact(K), "b(G) =", betti_exact(G))

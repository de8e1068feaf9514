"""
Exterior derivative, Dirac and Hodge matrices
=============================================

"""

import numpy as np

from hodgespec import closure, exterior_derivative, dirac, hodge, parity_operator, connection_laplacian

G = closure([[1, 2, 3]])
d = exterior_derivative(G).matrix
D = dirac(G).matrix
L = hodge(G)

# d squares to zero and the parity operator anti-commutes with D
print("d^2 == 0:", not (d @ d).any())
P = parity_operator(G)
print("PD + DP == 0:", not (P @ D + D @ P).any())

# L = D^2 is block diagonal; one block per form degree
for k, B in enumerate(L.blocks):
    print(f"L_{k} =\n{B}")

# the connection matrix of a complex is unimodular
H = connection_laplacian(G)
print("det H =", round(np.linalg.det(H)))

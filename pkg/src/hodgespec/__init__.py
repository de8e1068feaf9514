"""Hodge spectra of finite simplicial complexes and their open/closed subsets."""

from .complex_core import (Complex, Filtration, as_simplex, canonical_filtration, closure, complement,
                           euler_characteristic, f_vector, is_closed, is_locally_maximal, is_open,
                           open_in_closure, random_open_set, random_subcomplex, remove_locally_maximal,
                           star, stars, subset, whitney_complex)
from .operators import (BlockMatrix, connection_laplacian, dirac, exterior_derivative, hodge, hodge_blocks,
                        incidence_sign, parity_operator, witten_deform, witten_hodge)
from .spectral import (Spectrum, analytic_torsion, betti_exact, block_spectra, eigenvalues_sym, forest_det,
                       hodge_pseudo_det, hodge_spectrum, pad_left, pseudo_det, trace)

__version__ = "0.1.0"

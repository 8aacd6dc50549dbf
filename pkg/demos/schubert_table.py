"""Images of Schubert polynomials for a composition shape.

The permutations whose Lehmer codes are the inversion vectors give an
additive basis; the transition matrix to the Springer monomials is
unitriangular.
"""

import sys

from eqspringer import project_polynomial, schubert_polynomial, w_alpha_set
from eqspringer.schubert import schubert_transition_matrix

alpha = tuple(int(a) for a in sys.argv[1].split(",")) if len(sys.argv) > 1 else (2, 1, 1)
for w in w_alpha_set(alpha):
    s = schubert_polynomial(w)
    print(f"{w}: S_w = {s}")
    print(f"{'':{len(str(w))}}  image = {project_polynomial(s, alpha).as_polynomial()}")

matrix = schubert_transition_matrix(alpha)
print(f"\ntransition matrix ({len(matrix)}x{len(matrix)}) is unitriangular")

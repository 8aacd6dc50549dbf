"""Write monomials of the flag variety in the Springer monomial basis.

The shape (3,3) has 20 Springer monomials; every other monomial of degree
at most 3 is rewritten in terms of them.
"""

import itertools

from eqspringer import build_p_delta, project_monomial, springer_monomials
from eqspringer.exactpoly import Ambient, Polynomial

alpha = (3, 3)
basis = set(springer_monomials(alpha).monomials)

print("lifting polynomial for x2 x3 x5:", build_p_delta((0, 1, 1, 0, 1, 0), alpha))
print()
for delta in itertools.product(range(3), repeat=5):
    delta += (0,)
    if sum(delta) > 3 or delta in basis:
        continue
    image = project_monomial(delta, alpha).as_polynomial()
    print(f"{Polynomial.monomial(delta, Ambient(6))!s:>14}  ->  {image}")

"""Expand an equivariant class in the basis {P_T} for the shape (2,2).

Prints the six tableaux, the localization matrix and the expansion of
x1 + x2 + x3 - 2 z1 - z2 computed two ways.
"""

from eqspringer import expand_back_substitution, expand_determinant, localization_matrix, parse_poly, shape_data

alpha = (2, 2)
sd = shape_data(alpha)

print("tableaux in total order, with P_T:")
for i, (t, p) in enumerate(zip(sd.tableaux, sd.p), start=1):
    print(f"  {i}  {t}  P = {p}")

print("\nlocalization matrix (row: P_T, column: fixed point):")
for row in localization_matrix(alpha).entries:
    print("  " + " | ".join(str(e) for e in row))

f = parse_poly("x1 + x2 + x3 - 2*z1 - z2", (4, 2))
a = expand_back_substitution(f, alpha)
b = expand_determinant(f, alpha)
print(f"\nf = {f}")
print("coefficients:", [str(c) for c in a.coefficients])
print("determinant route agrees:", a == b)
print("recombined:", a.recombine())

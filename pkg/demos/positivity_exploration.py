"""Scan every composition with n <= 5 for negative Schubert coefficients.

Whether the images of Schubert polynomials always have non-negative
coefficients in the Springer monomial basis is an open question. This scan
only reports what happens at small scale.
"""

from eqspringer import positivity_scan, project_polynomial, schubert_polynomial
from eqspringer.tableaux import strong_compositions

for n in range(1, 6):
    for alpha in strong_compositions(n):
        report = positivity_scan(alpha)
        status = "positive" if report.positive else f"{len(report.negatives)} negative"
        print(f"{str(alpha):<18} checked {report.checked:>3}  {status}")
        for w, index, gamma, c in report.negatives:
            image = project_polynomial(schubert_polynomial(w), alpha).as_polynomial()
            print(f"    w={list(w)} tableau {index} x^{gamma}: {c}    image = {image}")

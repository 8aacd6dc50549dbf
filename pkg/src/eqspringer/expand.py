"""Expansions in the equivariant Springer monomial basis.

Every element ``F`` of the ring is determined by its localizations, and the
matrix ``Pbar[i][j] = phi_{w_j}(P_i)`` is upper triangular, so the basis
coefficients ``c`` solve ``c . Pbar = v`` with ``v_j = phi_{w_j}(F)``.

>>> from .exactpoly import Polynomial
>>> from .parse import parse_poly
>>> f = parse_poly("x1 + x2 + x3 - 2*z1 - z2", (4, 2))
>>> [str(c) for c in expand_back_substitution(f, (2, 2)).coefficients]
['0', '1', '1', '1', '0', '0']
>>> print(project_monomial((0, 1, 1, 0, 1), (3, 3)).as_polynomial())
-x1*x2*x3 - x1*x2*x5 - x1*x3*x5
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactpoly import (
    Ambient, AmbientMismatch, InexactDivisionError, Polynomial, RationalFunction, divide_exact,
)
from .springer import ShapeData, localize, shape_data
from .tableaux import Composition, ShapeError, as_composition, underlying_partition

__all__ = [
    "EquivariantExpansion", "OrdinaryExpansion", "localization_vector",
    "expand_back_substitution", "expand_determinant", "determinant_data", "determinant",
    "build_p_delta", "project_monomial", "evaluate_at_zero", "equal_in_quotient",
]


@dataclass(frozen=True)
class EquivariantExpansion:
    """Coefficients ``C_i`` (polynomials in z) against ``P_1 < ... < P_N``."""

    alpha: Composition
    coefficients: tuple[Polynomial, ...]

    def recombine(self) -> Polynomial:
        sd = shape_data(self.alpha)
        out = Polynomial.zero(sd.ambient)
        for c, p in zip(self.coefficients, sd.p):
            if c:
                out = out + c * p
        return out

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coefficients) if c]

    def evaluate_at_zero(self) -> OrdinaryExpansion:
        sd = shape_data(self.alpha)
        return OrdinaryExpansion(self.alpha, sd.gammas,
                                 tuple(c.constant_term() for c in self.coefficients))


@dataclass(frozen=True)
class OrdinaryExpansion:
    """Rational coefficients against the Springer monomials ``x^gamma`` in lex order."""

    alpha: Composition
    monomials: tuple[tuple[int, ...], ...]
    coefficients: tuple

    @property
    def lam(self) -> Composition:
        return underlying_partition(self.alpha)

    def as_polynomial(self, ambient: Ambient | None = None) -> Polynomial:
        n = len(self.monomials[0])
        ambient = Ambient(n) if ambient is None else ambient
        return Polynomial(
            {tuple(g) + (0,) * (ambient.nvars - n): c for g, c in zip(self.monomials, self.coefficients)},
            ambient,
        )

    def support(self) -> list[int]:
        return [i for i, c in enumerate(self.coefficients) if c]

    def __add__(self, other: OrdinaryExpansion) -> OrdinaryExpansion:
        if other.alpha != self.alpha:
            raise ShapeError("expansions over different shapes")
        return OrdinaryExpansion(self.alpha, self.monomials,
                                 tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def scale(self, c) -> OrdinaryExpansion:
        return OrdinaryExpansion(self.alpha, self.monomials, tuple(c * a for a in self.coefficients))


def _prepare(f: Polynomial, alpha) -> tuple[ShapeData, Polynomial]:
    sd = shape_data(alpha)
    amb = f.ambient
    if amb != sd.ambient:
        if amb.n != sd.n or amb.ny or amb.k > sd.ambient.k:
            raise AmbientMismatch(f"ambient {tuple(amb)} does not fit shape {sd.alpha}")
        f = f.embed(sd.ambient)
    return sd, f


def localization_vector(f: Polynomial, alpha: Sequence[int]) -> tuple[Polynomial, ...]:
    sd, f = _prepare(f, as_composition(alpha))
    return tuple(localize(f, t) for t in sd.tableaux)


def _pbar(sd: ShapeData, i: int, j: int) -> Polynomial:
    from .springer import localization_matrix
    return localization_matrix(sd.alpha).entries[i][j]


def _index_sets(sd: ShapeData, f: Polynomial, graded: bool):
    """Pairs (component, tableau indices) to solve; graded mode restricts each
    homogeneous component of degree d to tableaux of degree <= d."""
    if f.is_zero():
        return []
    if not graded:
        return [(f, list(range(sd.size)))]
    return [(part, [i for i in range(sd.size) if sd.degrees[i] <= d])
            for d, part in f.homogeneous_components().items()]


def expand_back_substitution(f: Polynomial, alpha: Sequence[int], graded: bool = True) -> EquivariantExpansion:
    """Triangular solve of ``c . Pbar = v`` with exact polynomial division."""
    alpha = as_composition(alpha)
    sd, f = _prepare(f, alpha)
    zero = Polynomial.zero(sd.ambient)
    coeffs = [zero] * sd.size
    for part, idx in _index_sets(sd, f, graded):
        local: dict[int, Polynomial] = {}
        for j in idx:
            acc = localize(part, sd.tableaux[j])
            for i, ci in local.items():
                if ci:
                    entry = _pbar(sd, i, j)
                    if entry:
                        acc = acc - ci * entry
            local[j] = divide_exact(acc, _pbar(sd, j, j)) if acc else zero
        for j, c in local.items():
            coeffs[j] = coeffs[j] + c
    return EquivariantExpansion(alpha, tuple(coeffs))


def determinant(matrix: Sequence[Sequence[RationalFunction]]) -> RationalFunction:
    """Determinant by Gaussian elimination over the fraction field.

    Pivots are chosen per column, preferring a non-zero constant entry (which
    avoids division), otherwise the first non-zero entry.
    """
    rows = [list(r) for r in matrix]
    size = len(rows)
    if size == 0:
        raise ValueError("empty matrix")
    amb = rows[0][0].ambient
    one = RationalFunction(Polynomial.one(amb))
    det = one
    sign = 1
    live = list(range(size))
    for col in range(size):
        candidates = [r for r in live if not rows[r][col].is_zero()]
        if not candidates:
            return RationalFunction(Polynomial.zero(amb))
        unit = [r for r in candidates if rows[r][col].is_polynomial() and rows[r][col].num.is_constant()]
        piv = (unit or candidates)[0]
        # sign of moving the pivot row to the front of the live rows
        if live.index(piv) % 2:
            sign = -sign
        live.remove(piv)
        p = rows[piv][col]
        det = det * p
        prow = rows[piv]
        for r in candidates:
            if r == piv:
                continue
            factor = rows[r][col] / p
            row = rows[r]
            for c in range(col + 1, size):
                if not prow[c].is_zero():
                    row[c] = row[c] - factor * prow[c]
            row[col] = RationalFunction(Polynomial.zero(amb))
    return det if sign > 0 else -det


@dataclass(frozen=True)
class DeterminantData:
    """Localization vector ``v``, the normalized coefficients ``d`` and ``c``."""

    v: tuple[Polynomial, ...]
    d: tuple[RationalFunction, ...]
    c: tuple[Polynomial, ...]


def _determinant_solve(sd: ShapeData, part: Polynomial, idx: list[int]):
    v = [localize(part, sd.tableaux[j]) for j in idx]
    diag = [_pbar(sd, j, j) for j in idx]
    rf = [[None] * len(idx) for _ in idx]
    for a, i in enumerate(idx):
        for b, j in enumerate(idx):
            e = _pbar(sd, i, j)
            rf[a][b] = RationalFunction(e, diag[a]) if e else RationalFunction(e)
    vrow = [RationalFunction(x) for x in v]
    ds, cs = [], []
    for k in range(1, len(idx) + 1):
        mat = [vrow[:k]] + [rf[i][:k] for i in range(k - 1)]
        dk = determinant(mat)
        if (k - 1) % 2:
            dk = -dk
        ds.append(dk)
        cs.append((dk / RationalFunction(diag[k - 1])).to_polynomial())
    return v, ds, cs


def determinant_data(f: Polynomial, alpha: Sequence[int], graded: bool = False) -> DeterminantData:
    """``v``, ``d`` and ``c`` from the determinant formula (full index set by default)."""
    alpha = as_composition(alpha)
    sd, f = _prepare(f, alpha)
    amb = sd.ambient
    zero = Polynomial.zero(amb)
    v = [localize(f, t) for t in sd.tableaux]
    d = [RationalFunction(zero)] * sd.size
    c = [zero] * sd.size
    for part, idx in _index_sets(sd, f, graded):
        _, ds, cs = _determinant_solve(sd, part, idx)
        for pos, j in enumerate(idx):
            d[j] = d[j] + ds[pos]
            c[j] = c[j] + cs[pos]
    return DeterminantData(tuple(v), tuple(d), tuple(c))


def expand_determinant(f: Polynomial, alpha: Sequence[int], graded: bool = True) -> EquivariantExpansion:
    """Coefficients from leading minors of the normalized localization matrix."""
    alpha = as_composition(alpha)
    return EquivariantExpansion(alpha, determinant_data(f, alpha, graded=graded).c)


def _normalize_delta(delta: Sequence[int], n: int) -> tuple[int, ...]:
    delta = tuple(int(e) for e in delta)
    if any(e < 0 for e in delta):
        raise ValueError(f"negative exponent in {delta}")
    if len(delta) > n:
        raise ValueError(f"exponent vector {delta} longer than n={n}")
    return delta + (0,) * (n - len(delta))


def build_p_delta(delta: Sequence[int], alpha: Sequence[int]) -> Polynomial:
    """A lift of ``x^delta`` that vanishes at every fixed point below it."""
    alpha = as_composition(alpha)
    sd = shape_data(alpha)
    n = sd.n
    delta = _normalize_delta(delta, n)
    if delta[-1]:
        raise ValueError(f"exponent of x{n} must be zero, got {delta}")
    where = sd.index_of_gamma()
    if delta in where:
        return sd.p[where[delta]]
    below = [i for i, g in enumerate(sd.gammas) if g < delta]
    if not below:  # pragma: no cover - the zero vector is always an inversion vector
        raise ValueError(f"no tableau lies below {delta}")
    u = below[-1]
    gamma = sd.gammas[u]
    k = next(i for i in range(n) if gamma[i] != delta[i]) + 1
    assert gamma[k - 1] < delta[k - 1]
    jp = sd.rows[u][k - 1]
    amb = sd.ambient
    dprime = [0] * (k - 1) + [delta[k - 1] - gamma[k - 1] - 1] + list(delta[k:])
    out = Polynomial.monomial(dprime, amb)
    out = out * (Polynomial.var(f"x{k}", amb) - Polynomial.var(f"z{jp}", amb))
    for i, j in sd.inversions[u]:
        if i <= k:
            out = out * (Polynomial.var(f"x{i}", amb) - Polynomial.var(f"z{j}", amb))
    return out


@lru_cache(maxsize=None)
def _numeric(alpha: Composition, limit: int):
    """Pbar at z_j = j, restricted to tableaux of degree <= limit.

    Returns (indices, per-column lists of (position, value) above the
    diagonal, diagonal values).
    """
    sd = shape_data(alpha)
    idx = [i for i in range(sd.size) if sd.degrees[i] <= limit]
    cols, diag = [], []
    for b, j in enumerate(idx):
        rows_j = sd.rows[j]
        col = []
        for a in range(b + 1):
            val = 1
            for p, q in sd.inversions[idx[a]]:
                r = rows_j[p - 1]
                if r == q:
                    val = 0
                    break
                val *= r - q
            if a == b:
                diag.append(val)
            elif val:
                col.append((a, val))
        cols.append(col)
    return idx, cols, diag


def _project_specialized(delta: tuple[int, ...], alpha: Composition) -> tuple:
    # Expand the lift x^delta with z_j specialized to j.  Integrality of the
    # equivariant coefficients makes every division exact, and the
    # coefficients at tableaux of degree |delta| are constants, so they
    # survive the specialization unchanged.
    sd = shape_data(alpha)
    m = sum(delta)
    out = [0] * sd.size
    idx, cols, diag = _numeric(alpha, m)
    c = []
    for b, j in enumerate(idx):
        rows_j = sd.rows[j]
        val = 1
        for i, e in enumerate(delta):
            if e:
                val *= rows_j[i] ** e
        for a, entry in cols[b]:
            if c[a]:
                val -= c[a] * entry
        q, r = divmod(val, diag[b])
        if r:
            raise InexactDivisionError(f"non-integral coefficient while projecting {delta}")
        c.append(q)
        if sd.degrees[j] == m:
            out[j] = q
    return tuple(out)


def _project_symbolic(delta: tuple[int, ...], alpha: Composition) -> tuple:
    sd = shape_data(alpha)
    exp = expand_back_substitution(build_p_delta(delta, alpha), alpha)
    m = sum(delta)
    return tuple(c.constant_term() if sd.degrees[i] == m else 0
                 for i, c in enumerate(exp.coefficients))


@lru_cache(maxsize=None)
def _project_cached(delta: tuple[int, ...], alpha: Composition, method: str) -> tuple:
    sd = shape_data(alpha)
    where = sd.index_of_gamma()
    if method == "specialized" and delta in where:
        out = [0] * sd.size
        out[where[delta]] = 1
        return tuple(out)
    if sum(delta) > max(sd.degrees):
        return (0,) * sd.size
    if method == "specialized":
        return _project_specialized(delta, alpha)
    if method == "symbolic":
        return _project_symbolic(delta, alpha)
    raise ValueError(f"unknown projection method {method!r}")


def project_monomial(delta: Sequence[int], alpha: Sequence[int], method: str = "specialized") -> OrdinaryExpansion:
    """Image of ``x^delta`` in ordinary cohomology, in the Springer monomial basis.

    ``method="symbolic"`` expands the lift ``P_delta`` over the polynomial
    ring; ``"specialized"`` expands ``x^delta`` itself at integer z-values.
    """
    alpha = as_composition(alpha)
    sd = shape_data(alpha)
    delta = _normalize_delta(delta, sd.n)
    return OrdinaryExpansion(alpha, sd.gammas, _project_cached(delta, alpha, method))


def evaluate_at_zero(f: Polynomial) -> Polynomial:
    """Set every z (and y) variable to zero; the result lives in the x-only ambient."""
    n = f.ambient.n
    target = list(range(n)) + [None] * (f.ambient.nvars - n)
    return f.map_variables(target, Ambient(n))


def equal_in_quotient(f: Polynomial, g: Polynomial, alpha: Sequence[int], ordinary: bool = False) -> bool:
    """True when ``f - g`` vanishes at every fixed point of the shape.

    With ``ordinary=True`` the comparison is made after setting z to zero,
    i.e. between the images in ordinary cohomology.

    >>> from .parse import parse_poly
    >>> f, g = parse_poly("x2*x3", (4, 2)), parse_poly("-x1*x3 - x1*x2", (4, 2))
    >>> equal_in_quotient(f, g, (2, 2)), equal_in_quotient(f, g, (2, 2), ordinary=True)
    (False, True)
    """
    alpha = as_composition(alpha)
    sd, f = _prepare(f, alpha)
    _, g = _prepare(g, alpha)
    diff = f - g
    if ordinary:
        return not any(expand_back_substitution(diff, alpha).evaluate_at_zero().coefficients)
    return all(localize(diff, t).is_zero() for t in sd.tableaux)

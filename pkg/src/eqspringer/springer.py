"""Springer monomials, equivariant Springer monomials and localization.

>>> sb = springer_monomials((2, 2))
>>> [str(m) for m in sb.polynomials()]
['1', 'x3', 'x2', 'x1', 'x1*x3', 'x1*x2']
>>> lm = localization_matrix((2, 2))
>>> print(lm.entries[4][4])
z1^2 - 2*z1*z2 + z2^2
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .exactpoly import Ambient, AmbientMismatch, Polynomial
from .tableaux import (
    Composition, Permutation, RowStrictTableau, ShapeError, as_composition, block_of_position,
    enumerate_tableaux, eta, inversion_vector, is_permutation, is_strong, multinomial,
    row_rank, springer_inversions,
)

__all__ = [
    "SpringerBasis", "LocalizationMatrix", "ShapeData", "springer_monomials",
    "p_polynomial", "q_factor", "localize", "localize_at_permutation",
    "localize_p", "localization_matrix", "shape_data", "ambient_for",
]


def ambient_for(alpha: Sequence[int], n: int | None = None) -> Ambient:
    alpha = as_composition(alpha)
    return Ambient(sum(alpha) if n is None else n, len(alpha))


@dataclass(frozen=True)
class SpringerBasis:
    """Springer monomials for a partition, as exponent vectors of length ``n``
    sorted in increasing lex order."""

    lam: Composition
    n: int
    monomials: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.monomials)

    def polynomials(self, ambient: Ambient | None = None) -> list[Polynomial]:
        ambient = Ambient(self.n) if ambient is None else ambient
        return [Polynomial.monomial(e, ambient) for e in self.monomials]

    def degree_census(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for e in self.monomials:
            out[sum(e)] = out.get(sum(e), 0) + 1
        return out


@lru_cache(maxsize=None)
def _sp_prime(lam: Composition) -> frozenset[tuple[int, ...]]:
    # untwisted recursion; exponent vectors of length |lam|, variable x_n last
    n = sum(lam)
    if n == 1:
        return frozenset({(0,)})
    out = set()
    for i in range(len(lam)):
        smaller = list(lam)
        smaller[i] -= 1
        smaller = tuple(sorted((p for p in smaller if p), reverse=True))
        for e in _sp_prime(smaller):
            out.add(e + (i,))
    return frozenset(out)


def springer_monomials(lam: Sequence[int], n: int | None = None) -> SpringerBasis:
    """Springer monomial basis for the partition ``lam`` (twisted by the longest element)."""
    lam = as_composition(lam)
    if not is_strong(lam) or list(lam) != sorted(lam, reverse=True):
        raise ShapeError(f"{lam} is not a partition")
    size = sum(lam)
    n = size if n is None else n
    if n != size:
        raise ShapeError(f"partition {lam} is not a partition of n={n}")
    monos = sorted(tuple(reversed(e)) for e in _sp_prime(lam))
    return SpringerBasis(lam, n, tuple(monos))


def _check_ambient(t: RowStrictTableau, ambient: Ambient | None) -> Ambient:
    if ambient is None:
        return Ambient(t.n, t.k)
    if ambient.n != t.n or ambient.k < t.k:
        raise AmbientMismatch(f"tableau needs n={t.n}, k>={t.k}; got {tuple(ambient)}")
    return ambient


def _linear(i: int, j: int, ambient: Ambient) -> Polynomial:
    # x_i - z_j
    e1 = [0] * ambient.nvars
    e2 = [0] * ambient.nvars
    e1[i - 1] = 1
    e2[ambient.n + j - 1] = 1
    return Polynomial._raw({tuple(e1): 1, tuple(e2): -1}, ambient)


def _product(pairs, ambient: Ambient) -> Polynomial:
    out = Polynomial.one(ambient)
    for i, j in sorted(pairs):
        out = out * _linear(i, j, ambient)
    return out


def p_polynomial(t: RowStrictTableau, ambient: Ambient | None = None) -> Polynomial:
    """Product of ``x_i - z_j`` over the Springer inversions of ``t``."""
    return _product(springer_inversions(t), _check_ambient(t, ambient))


def q_factor(t: RowStrictTableau, ambient: Ambient | None = None) -> Polynomial:
    """Factors of ``P_t`` that involve the smallest entry, via the row-length rule."""
    if t.m == 0:
        raise ShapeError("q_factor of the empty tableau")
    ambient = _check_ambient(t, ambient)
    shape, mbar = t.shape, t.mbar
    jt = t.row_of(mbar)
    lt = shape[jt - 1]
    pairs = [(mbar, j) for j, lj in enumerate(shape, 1)
             if j != jt and (lj > lt or (lj == lt and j < jt))]
    assert len(pairs) == row_rank(shape, jt)
    return _product(pairs, ambient)


def _x_to_rows(rows_of: Sequence[int], ambient: Ambient) -> list[int]:
    n = ambient.n
    return [n + rows_of[i] - 1 for i in range(n)] + list(range(n, ambient.nvars))


def localize(f: Polynomial, t: RowStrictTableau) -> Polynomial:
    """Substitute ``x_i -> z_{row of i in t}``."""
    if not is_strong(t.shape) or t.m != t.n:
        raise ShapeError(f"localization needs a strong shape filling [1, n], got {t.shape}")
    amb = f.ambient
    if amb.n != t.n or amb.k < t.k:
        raise AmbientMismatch(f"polynomial ambient {tuple(amb)} vs tableau n={t.n}, k={t.k}")
    return f.map_variables(_x_to_rows(t.row_vector, amb))


def localize_at_permutation(f: Polynomial, w: Permutation, alpha: Sequence[int]) -> Polynomial:
    """``F(z, w.z)``: ``x_i`` goes to the z of the block containing position ``w^-1(i)``."""
    alpha = as_composition(alpha)
    if not is_permutation(w) or len(w) != sum(alpha):
        raise ShapeError(f"{w} is not a permutation of [{sum(alpha)}]")
    blocks = block_of_position(alpha)
    inv = [0] * len(w)
    for p, v in enumerate(w, 1):
        inv[v - 1] = p
    rows_of = [blocks[inv[i] - 1] for i in range(len(w))]
    amb = f.ambient
    if amb.n != len(w) or amb.k < len(alpha):
        raise AmbientMismatch("ambient does not match the composition")
    return f.map_variables(_x_to_rows(rows_of, amb))


def localize_p(t: RowStrictTableau, at: RowStrictTableau, ambient: Ambient | None = None) -> Polynomial:
    """Localization of ``P_t`` at the fixed point of ``at``, computed factor by factor."""
    ambient = _check_ambient(t, ambient)
    rows_of = at.row_vector
    n = ambient.n
    out = Polynomial.one(ambient)
    for i, j in sorted(springer_inversions(t)):
        r = rows_of[i - 1]
        if r == j:
            return Polynomial.zero(ambient)
        e1 = [0] * ambient.nvars
        e2 = [0] * ambient.nvars
        e1[n + r - 1] = 1
        e2[n + j - 1] = 1
        out = out * Polynomial._raw({tuple(e1): 1, tuple(e2): -1}, ambient)
    return out


@dataclass(frozen=True)
class ShapeData:
    """Per-shape precomputation shared by the expansion routines."""

    alpha: Composition
    n: int
    ambient: Ambient
    tableaux: tuple[RowStrictTableau, ...]
    inversions: tuple[tuple[tuple[int, int], ...], ...]
    gammas: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]
    p: tuple[Polynomial, ...]

    @property
    def size(self) -> int:
        return len(self.tableaux)

    def index_of_gamma(self) -> dict[tuple[int, ...], int]:
        return {g: i for i, g in enumerate(self.gammas)}


@lru_cache(maxsize=None)
def _shape_data(alpha: Composition) -> ShapeData:
    n = sum(alpha)
    amb = Ambient(n, len(alpha))
    ts = enumerate_tableaux(alpha, n)
    invs = tuple(tuple(sorted(springer_inversions(t))) for t in ts)
    gammas = tuple(inversion_vector(t) for t in ts)
    return ShapeData(
        alpha=alpha, n=n, ambient=amb, tableaux=ts, inversions=invs, gammas=gammas,
        degrees=tuple(len(i) for i in invs), rows=tuple(t.row_vector for t in ts),
        p=tuple(_product(i, amb) for i in invs),
    )


def shape_data(alpha: Sequence[int]) -> ShapeData:
    alpha = as_composition(alpha)
    if not is_strong(alpha):
        raise ShapeError(f"{alpha} is not a strong composition")
    return _shape_data(alpha)


@dataclass(frozen=True)
class LocalizationMatrix:
    """``entries[i][j]`` is the localization of ``P_i`` at the ``j``-th fixed point."""

    alpha: Composition
    tableaux: tuple[RowStrictTableau, ...]
    entries: tuple[tuple[Polynomial, ...], ...]

    @property
    def size(self) -> int:
        return len(self.entries)

    def is_upper_triangular(self) -> bool:
        return all(
            self.entries[i][j].is_zero() for i in range(self.size) for j in range(i)
        ) and all(not self.entries[i][i].is_zero() for i in range(self.size))


@lru_cache(maxsize=64)
def _loc_matrix(alpha: Composition) -> LocalizationMatrix:
    sd = _shape_data(alpha)
    ts = sd.tableaux
    entries = tuple(
        tuple(localize_p(ts[i], ts[j], sd.ambient) for j in range(sd.size)) for i in range(sd.size)
    )
    return LocalizationMatrix(alpha, ts, entries)


def localization_matrix(alpha: Sequence[int], n: int | None = None) -> LocalizationMatrix:
    alpha = as_composition(alpha)
    if not is_strong(alpha):
        raise ShapeError(f"{alpha} is not a strong composition")
    if n is not None and n != sum(alpha):
        raise ShapeError(f"{alpha} is not a composition of n={n}")
    lm = _loc_matrix(alpha)
    assert lm.size == multinomial(alpha)
    return lm

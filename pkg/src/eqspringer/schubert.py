"""Schubert polynomials and their images in Springer fiber cohomology.

Permutations are 1-based one-line tuples.  ``s_i`` acts on the right by
swapping positions ``i`` and ``i + 1``, so the word ``s1 s2`` is ``(2, 3, 1)``.

>>> print(schubert_polynomial((1, 4, 3, 2)))
x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x2^2*x3
>>> lehmer_code((1, 5, 3, 6, 2, 4))
(0, 3, 1, 2, 0, 0)
>>> print(project_polynomial(schubert_polynomial((1, 4, 2, 3)), (2, 2)).as_polynomial())
x1*x2
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Sequence

from .exactpoly import Ambient, AmbientMismatch, Polynomial, divided_difference
from .expand import EquivariantExpansion, OrdinaryExpansion, expand_back_substitution, project_monomial
from .springer import shape_data
from .tableaux import (
    Composition, Permutation, ShapeError, as_composition, block_of_position, is_permutation, is_strong,
)

__all__ = [
    "TriangularityError", "lehmer_code", "permutation_from_code", "code_word", "length",
    "simple_word_to_permutation", "schubert_polynomial", "double_schubert_polynomial",
    "apply_istar", "w_alpha_set", "project_polynomial", "schubert_transition_matrix",
    "equivariant_schubert_expansion", "PositivityReport", "positivity_scan", "monk_check",
    "Relations", "linear_relations", "permutations_of_length",
]


class TriangularityError(AssertionError):
    """The Schubert transition matrix failed to be unitriangular."""


def _check_perm(w: Sequence[int]) -> Permutation:
    w = tuple(int(v) for v in w)
    if not w or not is_permutation(w):
        raise ValueError(f"{w} is not a permutation")
    return w


def length(w: Sequence[int]) -> int:
    w = _check_perm(w)
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def lehmer_code(w: Sequence[int]) -> tuple[int, ...]:
    """``gamma_k`` = number of ``j > k`` with ``w(k) > w(j)``."""
    w = _check_perm(w)
    return tuple(sum(1 for j in range(k + 1, len(w)) if w[j] < w[k]) for k in range(len(w)))


def code_word(gamma: Sequence[int]) -> list[int]:
    """Simple-reflection indices of ``w_1 w_2 ... w_{n-1}`` with
    ``w_k = s_{k+gamma_k-1} ... s_{k+1} s_k``."""
    gamma = tuple(int(g) for g in gamma)
    n = len(gamma)
    for k, g in enumerate(gamma, 1):
        if not 0 <= g <= n - k:
            raise ValueError(f"code entry gamma_{k}={g} outside [0, {n - k}]")
    word = []
    for k, g in enumerate(gamma, 1):
        word.extend(range(k + g - 1, k - 1, -1))
    return word


def simple_word_to_permutation(word: Iterable[int], n: int) -> Permutation:
    w = list(range(1, n + 1))
    for i in word:
        if not 1 <= i < n:
            raise ValueError(f"s_{i} is not a simple reflection of S_{n}")
        w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def permutation_from_code(gamma: Sequence[int]) -> Permutation:
    """The permutation whose Lehmer code is ``gamma`` (length n, last entry 0)."""
    return simple_word_to_permutation(code_word(gamma), len(tuple(gamma)))


def _strip(w: Permutation) -> Permutation:
    m = len(w)
    while m > 1 and w[m - 1] == m:
        m -= 1
    return w[:m]


_memo: dict[tuple[str, Permutation], Polynomial] = {}
_memo_lock = threading.Lock()


def _schubert_core(w: Permutation, double: bool) -> Polynomial:
    key = ("d" if double else "s", w)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    m = len(w)
    amb = Ambient(m, 0, m) if double else Ambient(m)
    ascent = next((i for i in range(1, m) if w[i - 1] < w[i]), None)
    if ascent is None:
        # longest element: seed
        if double:
            out = Polynomial.one(amb)
            for i in range(1, m):
                for j in range(1, m - i + 1):
                    out = out * (Polynomial.var(f"x{i}", amb) - Polynomial.var(f"y{j}", amb))
        else:
            out = Polynomial.monomial([m - i for i in range(1, m)], amb)
    else:
        ws = list(w)
        ws[ascent - 1], ws[ascent] = ws[ascent], ws[ascent - 1]
        out = divided_difference(ascent, _schubert_core(tuple(ws), double))
    with _memo_lock:
        _memo[key] = out
    return out


def schubert_polynomial(w: Sequence[int]) -> Polynomial:
    """Schubert polynomial over ``Ambient(len(w))``, from the longest element by divided differences."""
    w = _check_perm(w)
    return _schubert_core(_strip(w), False).embed(Ambient(len(w)))


def double_schubert_polynomial(w: Sequence[int]) -> Polynomial:
    """Double Schubert polynomial over ``Ambient(n, 0, n)``; the seed is
    ``prod_{i+j<=n} (x_i - y_j)`` and divided differences act on x."""
    w = _check_perm(w)
    n = len(w)
    return _schubert_core(_strip(w), True).embed(Ambient(n, 0, n))


def apply_istar(f: Polynomial, alpha: Sequence[int]) -> Polynomial:
    """Send ``y_p`` to ``z_j`` where position ``p`` lies in the ``j``-th block of ``alpha``."""
    alpha = as_composition(alpha)
    amb = f.ambient
    n = sum(alpha)
    if amb.n != n or amb.ny not in (0, n) or amb.k not in (0, len(alpha)):
        raise AmbientMismatch(f"ambient {tuple(amb)} does not match composition {alpha}")
    out_amb = Ambient(n, len(alpha))
    blocks = block_of_position(alpha)
    target = list(range(n)) + [n + j for j in range(amb.k)] + [n + blocks[p] - 1 for p in range(amb.ny)]
    return f.map_variables(target, out_amb)


def w_alpha_set(alpha: Sequence[int], n: int | None = None) -> tuple[Permutation, ...]:
    """Permutations whose Lehmer codes are the inversion vectors, in total order."""
    alpha = as_composition(alpha)
    if n is not None and n != sum(alpha):
        raise ShapeError(f"{alpha} is not a composition of n={n}")
    return tuple(permutation_from_code(g) for g in shape_data(alpha).gammas)


def _x_part(f: Polynomial, n: int):
    for e, c in f.terms.items():
        if any(e[n:]):
            raise ValueError("projection needs a polynomial in x only")
        yield e[:n], c


def project_polynomial(f: Polynomial, alpha: Sequence[int], method: str = "specialized") -> OrdinaryExpansion:
    """Image in ordinary cohomology, monomial by monomial."""
    alpha = as_composition(alpha)
    sd = shape_data(alpha)
    if f.ambient.n != sd.n:
        raise AmbientMismatch(f"polynomial in {f.ambient.n} x-variables, shape needs {sd.n}")
    total = [0] * sd.size
    for delta, c in _x_part(f, sd.n):
        img = project_monomial(delta, alpha, method).coefficients
        for i, v in enumerate(img):
            if v:
                total[i] += c * v
    return OrdinaryExpansion(alpha, sd.gammas, tuple(total))


def schubert_transition_matrix(alpha: Sequence[int], method: str = "specialized") -> tuple[tuple, ...]:
    """Rows: images of the Schubert polynomials of the canonical permutation set;
    columns: Springer monomials.  Raises TriangularityError unless unitriangular."""
    alpha = as_composition(alpha)
    if not is_strong(alpha):
        raise ShapeError(f"{alpha} is not a strong composition")
    rows = tuple(project_polynomial(schubert_polynomial(w), alpha, method).coefficients
                 for w in w_alpha_set(alpha))
    for i, row in enumerate(rows):
        if row[i] != 1 or any(row[j] for j in range(i)):
            raise TriangularityError(f"row {i + 1} of the transition matrix for {alpha} is {row}")
    return rows


def equivariant_schubert_expansion(w: Sequence[int], alpha: Sequence[int]) -> EquivariantExpansion:
    """Expansion of ``i*`` of the double Schubert polynomial in the ``P`` basis."""
    alpha = as_composition(alpha)
    w = _check_perm(w)
    if len(w) != sum(alpha):
        raise ShapeError(f"{w} is not in S_{sum(alpha)}")
    return expand_back_substitution(apply_istar(double_schubert_polynomial(w), alpha), alpha)


def permutations_of_length(n: int, ell: int | None = None) -> list[Permutation]:
    """Permutations of ``[n]`` (optionally of a fixed length) sorted by length, then code."""
    perms = [tuple(p) for p in permutations(range(1, n + 1))]
    if ell is not None:
        perms = [p for p in perms if length(p) == ell]
    return sorted(perms, key=lambda p: (length(p), lehmer_code(p)))


@dataclass(frozen=True)
class PositivityReport:
    """Negative coefficients found in the images of Schubert polynomials.

    ``negatives`` holds ``(w, tableau index (1-based), inversion vector, coefficient)``.
    An empty tuple means no counterexample at this scale; it proves nothing more.
    """

    alpha: Composition
    max_length: int
    checked: int
    negatives: tuple

    @property
    def positive(self) -> bool:
        return not self.negatives


def positivity_scan(alpha: Sequence[int], max_length: int | None = None) -> PositivityReport:
    alpha = as_composition(alpha)
    sd = shape_data(alpha)
    n = sd.n
    top = n * (n - 1) // 2
    max_length = top if max_length is None else min(max_length, top)
    negatives = []
    checked = 0
    for w in permutations_of_length(n):
        if length(w) > max_length:
            break
        checked += 1
        img = project_polynomial(schubert_polynomial(w), alpha).coefficients
        for i, c in enumerate(img):
            if c < 0:
                negatives.append((w, i + 1, sd.gammas[i], c))
    return PositivityReport(alpha, max_length, checked, tuple(negatives))


def _transpose(u: Permutation, a: int, b: int) -> Permutation:
    v = list(u)
    v[a - 1], v[b - 1] = v[b - 1], v[a - 1]
    return tuple(v)


def monk_check(u: Sequence[int], k: int) -> bool:
    """Check ``x_k S_u = sum_{j>k} S_{u t_kj} - sum_{j<k} S_{u t_jk}`` (length-raising terms only)
    with ``u`` embedded in one larger symmetric group."""
    u = _check_perm(u)
    n = len(u) + 1
    if not 1 <= k < n:
        raise ValueError(f"k={k} outside 1..{n - 1}")
    ue = u + (n,)
    amb = Ambient(n)
    lu = length(ue)
    lhs = Polynomial.var(f"x{k}", amb) * schubert_polynomial(ue)
    rhs = Polynomial.zero(amb)
    for j in range(1, n + 1):
        if j == k:
            continue
        v = _transpose(ue, min(j, k), max(j, k))
        if length(v) == lu + 1:
            term = schubert_polynomial(v)
            rhs = rhs + term if j > k else rhs - term
    return lhs == rhs


@dataclass(frozen=True)
class Relations:
    """Linear relations among images of Schubert polynomials of one length.

    ``vectors[r][i]`` is the coefficient of ``perms[i]`` in relation ``r``.
    """

    alpha: Composition
    degree: int
    perms: tuple[Permutation, ...]
    images: tuple[tuple, ...]
    vectors: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)


def _left_kernel(rows: Sequence[Sequence]) -> list[tuple[Fraction, ...]]:
    # kernel of the transpose via reduced row echelon form
    m = len(rows)
    if m == 0:
        return []
    width = len(rows[0])
    mat = [[Fraction(rows[i][j]) for i in range(m)] for j in range(width)]
    pivots = []
    r = 0
    for c in range(m):
        p = next((i for i in range(r, width) if mat[i][c]), None)
        if p is None:
            continue
        mat[r], mat[p] = mat[p], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(width):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == width:
            break
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * m
        vec[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -mat[row][fc]
        basis.append(tuple(vec))
    return basis


def linear_relations(alpha: Sequence[int], degree: int) -> Relations:
    """Kernel of ``c -> sum_w c_w image(S_w)`` over all ``w`` of the given length."""
    alpha = as_composition(alpha)
    sd = shape_data(alpha)
    perms = tuple(permutations_of_length(sd.n, degree))
    images = tuple(project_polynomial(schubert_polynomial(w), alpha).coefficients for w in perms)
    return Relations(alpha, degree, perms, images, tuple(_left_kernel(images)))

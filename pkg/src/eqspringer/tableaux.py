"""Row-strict composition tableaux, Springer inversions and their total order.

A tableau of (weak) composition shape ``beta`` with ``m`` boxes, inside an
ambient ``n``, is filled with the integers ``mbar..n`` where
``mbar = n - m + 1``; entries decrease along each row.  Rows are indexed from
1 (top) and zero-length rows keep their slot.

>>> ts = enumerate_tableaux((2, 2), 4)
>>> [t.rows for t in ts][:3]
[((3, 1), (4, 2)), ((4, 1), (3, 2)), ((2, 1), (4, 3))]
>>> sorted(springer_inversions(ts[-1]))
[(1, 1), (2, 1)]
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Composition", "Permutation", "RowStrictTableau", "ShapeError",
    "as_composition", "is_strong", "underlying_partition", "strong_compositions",
    "partitions", "rearrangements", "multinomial", "enumerate_tableaux",
    "springer_inversions", "inversion_vector", "eta", "compare", "coset_rep",
    "row_rank", "is_permutation", "block_of_position",
]

Composition = tuple[int, ...]
Permutation = tuple[int, ...]


class ShapeError(ValueError):
    """Invalid composition, shape/ambient mismatch or malformed tableau."""


def as_composition(parts: Iterable[int] | str) -> Composition:
    """Normalize ``"2,2"`` or ``[2, 2]`` to a tuple of non-negative ints."""
    if isinstance(parts, str):
        text = parts.strip()
        if not text:
            raise ShapeError("empty composition")
        try:
            parts = [int(p) for p in text.split(",")]
        except ValueError as exc:
            raise ShapeError(f"bad composition {text!r}") from exc
    out = tuple(int(p) for p in parts)
    if any(p < 0 for p in out):
        raise ShapeError(f"negative part in {out}")
    return out


def is_strong(alpha: Sequence[int]) -> bool:
    return len(alpha) > 0 and all(p > 0 for p in alpha)


def underlying_partition(alpha: Sequence[int]) -> Composition:
    return tuple(sorted((p for p in alpha if p), reverse=True))


def strong_compositions(n: int) -> Iterator[Composition]:
    """All strong compositions of ``n`` (2^(n-1) of them), in reverse lex order."""
    if n == 0:
        yield ()
        return
    for first in range(n, 0, -1):
        for rest in strong_compositions(n - first):
            yield (first,) + rest


def partitions(n: int, largest: int | None = None) -> Iterator[Composition]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def rearrangements(lam: Sequence[int]) -> list[Composition]:
    """Distinct orderings of the parts of ``lam``."""
    from itertools import permutations
    return sorted(set(permutations(lam)), reverse=True)


def multinomial(alpha: Sequence[int]) -> int:
    return factorial(sum(alpha)) // prod(factorial(p) for p in alpha)


def is_permutation(w: Sequence[int]) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def block_of_position(alpha: Sequence[int]) -> tuple[int, ...]:
    """``out[p-1]`` is the (1-based) block of position ``p`` under ``alpha``."""
    return tuple(j + 1 for j, part in enumerate(alpha) for _ in range(part))


@dataclass(frozen=True)
class RowStrictTableau:
    """A shifted row-strict composition tableau.

    ``rows[j]`` holds row ``j + 1`` as a strictly decreasing tuple.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        entries = sorted(v for r in rows for v in r)
        m = len(entries)
        if m > self.n:
            raise ShapeError(f"{m} boxes exceed ambient n={self.n}")
        if entries != list(range(self.n - m + 1, self.n + 1)):
            raise ShapeError(f"content of {rows} is not [{self.n - m + 1}, {self.n}]")
        for r in rows:
            if any(a <= b for a, b in zip(r, r[1:])):
                raise ShapeError(f"row {r} is not strictly decreasing")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], n: int | None = None) -> RowStrictTableau:
        if n is None:
            n = max((v for r in rows for v in r), default=0)
        return cls(tuple(tuple(r) for r in rows), n)

    @property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    @property
    def m(self) -> int:
        return sum(self.shape)

    @property
    def mbar(self) -> int:
        return self.n - self.m + 1

    @property
    def k(self) -> int:
        return len(self.rows)

    @cached_property
    def positions(self) -> dict[int, tuple[int, int]]:
        """entry -> (row, column), both 1-based."""
        return {v: (j + 1, c + 1) for j, r in enumerate(self.rows) for c, v in enumerate(r)}

    def row_of(self, entry: int) -> int:
        return self.positions[entry][0]

    @cached_property
    def row_vector(self) -> tuple[int, ...]:
        """``out[i-1]`` = row containing ``i`` (0 if ``i`` is not an entry)."""
        pos = self.positions
        return tuple(pos[i][0] if i in pos else 0 for i in range(1, self.n + 1))

    def __str__(self):
        return " / ".join(" ".join(str(v) for v in r) if r else "." for r in self.rows)


def row_rank(shape: Sequence[int], j: int) -> int:
    """Number of rows that beat row ``j`` (1-based): strictly longer, or as long and higher."""
    lj = shape[j - 1]
    return sum(1 for i, li in enumerate(shape, 1) if i != j and (li > lj or (li == lj and i < j)))


def _ranked_rows(shape: Sequence[int]) -> list[int]:
    """Non-empty rows (1-based) ordered by rank: longest first, ties by index."""
    return sorted((j for j, l in enumerate(shape, 1) if l), key=lambda j: (-shape[j - 1], j))


@lru_cache(maxsize=None)
def _enumerate(shape: Composition, n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    m = sum(shape)
    if m == 0:
        return (tuple(() for _ in shape),)
    mbar = n - m + 1
    out = []
    # placing mbar in a lower-ranked row adds more inversions at mbar, and
    # mbar is the most significant exponent, so rank order is total order
    for j in _ranked_rows(shape):
        smaller = list(shape)
        smaller[j - 1] -= 1
        for rows in _enumerate(tuple(smaller), n):
            new = list(rows)
            new[j - 1] = rows[j - 1] + (mbar,)
            out.append(tuple(new))
    return tuple(out)


def enumerate_tableaux(shape: Iterable[int], n: int | None = None) -> tuple[RowStrictTableau, ...]:
    """All tableaux of ``shape`` (content ``[n-m+1, n]``) in increasing total order."""
    shape = as_composition(shape)
    m = sum(shape)
    n = m if n is None else n
    if m > n:
        raise ShapeError(f"shape {shape} has more than n={n} boxes")
    if not shape:
        raise ShapeError("empty shape")
    return tuple(RowStrictTableau(rows, n) for rows in _enumerate(shape, n))


def springer_inversions(t: RowStrictTableau) -> frozenset[tuple[int, int]]:
    """Pairs ``(i, j)`` such that row ``j`` holds some ``j' > i`` that is either
    directly above ``i`` in its column or in a column strictly right of it."""
    out = set()
    pos = t.positions
    for i, (ri, ci) in pos.items():
        for j, row in enumerate(t.rows, 1):
            for c, v in enumerate(row, 1):
                if v > i and (c > ci or (c == ci and j < ri)):
                    out.add((i, j))
                    break
    return frozenset(out)


def inversion_vector(t: RowStrictTableau) -> tuple[int, ...]:
    """``gamma[i-1]`` = number of inversions with first coordinate ``i``; length ``n``."""
    gamma = [0] * t.n
    for i, _ in springer_inversions(t):
        gamma[i - 1] += 1
    return tuple(gamma)


def eta(t: RowStrictTableau) -> RowStrictTableau:
    """Delete the box holding the smallest entry."""
    if t.m == 0:
        raise ShapeError("eta of the empty tableau")
    j = t.row_of(t.mbar)
    rows = list(t.rows)
    rows[j - 1] = rows[j - 1][:-1]
    return RowStrictTableau(tuple(rows), t.n)


def compare(a: RowStrictTableau, b: RowStrictTableau) -> int:
    """-1, 0 or 1 according to the recursive total order."""
    if a.shape != b.shape or a.n != b.n:
        raise ShapeError("compare needs tableaux of equal shape and ambient")
    while a.m:
        ja, jb = a.row_of(a.mbar), b.row_of(b.mbar)
        if ja != jb:
            if (a.mbar, ja) in springer_inversions(b):
                return -1
            if (b.mbar, jb) in springer_inversions(a):
                return 1
            raise AssertionError("trichotomy failed")  # pragma: no cover
        a, b = eta(a), eta(b)
    return 0


def coset_rep(t: RowStrictTableau) -> Permutation:
    """Minimal coset representative: block ``j`` of positions receives the entries
    of row ``j`` in increasing order.  Returned in one-line notation."""
    if not is_strong(t.shape) or t.m != t.n:
        raise ShapeError(f"coset_rep needs a strong composition of n, got {t.shape}")
    return tuple(v for r in t.rows for v in sorted(r))

import functools
import itertools
import math

import pytest
from hypothesis import given, strategies as st

from eqspringer.exactpoly import lex_compare
from eqspringer.tableaux import (
    RowStrictTableau, ShapeError, as_composition, block_of_position, compare, coset_rep,
    enumerate_tableaux, eta, inversion_vector, is_strong, multinomial, partitions,
    rearrangements, springer_inversions, strong_compositions, underlying_partition,
)

SMALL_SHAPES = [alpha for n in range(1, 6) for alpha in strong_compositions(n)]


def T(rows, n=None):
    return RowStrictTableau.from_rows(rows, n)


# Independent oracles -------------------------------------------------------

def recursive_inversions(t: RowStrictTableau) -> frozenset:
    """Inversions via the peel-off rule: the smallest entry inverts against
    every row that is longer, or equally long and earlier."""
    if t.m == 0:
        return frozenset()
    beta = t.shape
    j = t.row_of(t.mbar)
    own = {(t.mbar, r + 1) for r, b in enumerate(beta)
           if r + 1 != j and (b > beta[j - 1] or (b == beta[j - 1] and r + 1 < j))}
    return frozenset(own) | recursive_inversions(eta(t))


def order_key_compare(a: RowStrictTableau, b: RowStrictTableau) -> int:
    """The inductive total order, phrased directly through inversions."""
    if a == b:
        return 0
    ja, jb = a.row_of(a.mbar), b.row_of(b.mbar)
    if ja != jb:
        if (a.mbar, jb) in springer_inversions(a):
            return 1
        assert (b.mbar, ja) in springer_inversions(b)
        return -1
    return order_key_compare(eta(a), eta(b))


# Compositions --------------------------------------------------------------

def test_composition_helpers():
    assert as_composition("2,2") == (2, 2)
    assert as_composition([1, 0, 2]) == (1, 0, 2)
    assert is_strong((2, 1)) and not is_strong((2, 0, 1))
    assert underlying_partition((1, 3, 2)) == (3, 2, 1)
    assert multinomial((2, 1, 2)) == 30
    assert block_of_position((2, 1, 2)) == (1, 1, 2, 3, 3)
    assert sorted(rearrangements((2, 1, 1))) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    with pytest.raises(ShapeError):
        as_composition("2,-1")


@pytest.mark.parametrize("n", range(1, 8))
def test_strong_composition_count(n):
    assert len(list(strong_compositions(n))) == 2 ** (n - 1)


# Tableaux ------------------------------------------------------------------

def test_tableau_validation():
    with pytest.raises(ShapeError):
        T([[1, 2], [3]])  # rows must decrease
    with pytest.raises(ShapeError):
        T([[3, 1], [3, 2]])  # repeated entry
    t = T([[7, 4], [6, 1], [5, 3, 2]])
    assert t.shape == (2, 2, 3) and t.mbar == 1 and str(t) == "7 4 / 6 1 / 5 3 2"


def test_counting_small_shape():
    tabs = enumerate_tableaux((1, 2, 0, 1), 5)
    assert len(tabs) == 12
    assert all(sorted(e for row in t.rows for e in row) == [2, 3, 4, 5] for t in tabs)


def test_trivial_enumerations():
    (one,) = enumerate_tableaux((1,), 1)
    assert one.rows == ((1,),)
    (row,) = enumerate_tableaux((4,), 4)
    assert springer_inversions(row) == frozenset()
    assert coset_rep(row) == (1, 2, 3, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_counting_formula(n):
    for alpha in strong_compositions(n):
        expected = math.factorial(n) // math.prod(math.factorial(a) for a in alpha)
        assert len(enumerate_tableaux(alpha)) == expected


def test_example_order_two_two():
    expected = [
        [[3, 1], [4, 2]], [[4, 1], [3, 2]], [[2, 1], [4, 3]],
        [[3, 2], [4, 1]], [[4, 2], [3, 1]], [[4, 3], [2, 1]],
    ]
    tabs = enumerate_tableaux((2, 2))
    assert [t.rows for t in tabs] == [tuple(map(tuple, r)) for r in expected]
    monomials = [(0, 0, 0, 0), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0), (1, 0, 1, 0), (1, 1, 0, 0)]
    assert [inversion_vector(t) for t in tabs] == monomials


def test_worked_inversion_example():
    # As printed, the tableau carries an additional inversion (3,3); swapping
    # 3 and 4 between rows 1 and 3 gives the listed set and vector.
    listed = {(2, 1), (2, 3), (5, 1), (5, 3), (6, 3)}
    fixed = T([[6, 4], [], [8, 7, 3], [5, 2], [9]], 9)
    assert springer_inversions(fixed) == listed
    assert inversion_vector(fixed) == (0, 2, 0, 0, 2, 1, 0, 0, 0)
    printed = T([[6, 3], [], [8, 7, 4], [5, 2], [9]], 9)
    assert springer_inversions(printed) == listed | {(3, 3)}


def test_derived_inversion_examples():
    assert springer_inversions(T([[3, 2, 1], [6, 5, 4]])) == {(2, 2), (3, 2)}
    assert springer_inversions(T([[5, 4, 3, 2, 1]])) == frozenset()
    # Entry 2 sits in a column left of 4 and 3, which lie in row 3.
    assert springer_inversions(T([[5, 1], [2], [4, 3]])) == {(2, 1), (2, 3), (4, 1)}


def test_eta_display():
    assert eta(T([[7, 4], [6, 1], [5, 3, 2]])) == T([[7, 4], [6], [5, 3, 2]], 7)
    assert eta(T([[1]])).m == 0
    with pytest.raises(ShapeError):
        eta(eta(T([[1]])))


def test_coset_rep_examples():
    assert coset_rep(T([[5, 1], [2], [4, 3]])) == (1, 5, 2, 3, 4)
    assert coset_rep(enumerate_tableaux((2, 2))[0]) == (1, 3, 2, 4)
    with pytest.raises(ShapeError):
        coset_rep(T([[3, 2], [], [1]]))


@pytest.mark.parametrize("alpha", [a for n in range(1, 7) for a in strong_compositions(n)])
def test_inversions_match_recursive_rule(alpha):
    for t in enumerate_tableaux(alpha):
        assert springer_inversions(t) == recursive_inversions(t)


@pytest.mark.parametrize("alpha", SMALL_SHAPES + [(1, 0, 2), (0, 2, 1), (2, 0, 0, 1)])
def test_total_order_is_lex_on_inversion_vectors(alpha):
    tabs = enumerate_tableaux(alpha, sum(alpha) + 1)
    vecs = [inversion_vector(t) for t in tabs]
    assert vecs == sorted(vecs) and len(set(vecs)) == len(vecs)
    for a, b in itertools.combinations(tabs, 2):
        expected = lex_compare(inversion_vector(a), inversion_vector(b))
        assert compare(a, b) == expected == order_key_compare(a, b)
        assert compare(b, a) == -expected


@pytest.mark.parametrize("alpha", SMALL_SHAPES)
def test_trichotomy(alpha):
    for a, b in itertools.combinations(enumerate_tableaux(alpha), 2):
        ja, jb = a.row_of(a.mbar), b.row_of(b.mbar)
        cases = [(a.mbar, jb) in springer_inversions(a), (b.mbar, ja) in springer_inversions(b), ja == jb]
        assert sum(cases) == 1


@pytest.mark.parametrize("alpha", SMALL_SHAPES)
def test_eta_is_a_bijection_onto_smaller_shapes(alpha):
    n = sum(alpha)
    images = {}
    for t in enumerate_tableaux(alpha):
        images.setdefault(t.row_of(t.mbar), set()).add(eta(t))
    for j, got in images.items():
        smaller = list(alpha)
        smaller[j - 1] -= 1
        assert got == set(enumerate_tableaux(tuple(smaller), n))


@pytest.mark.parametrize("alpha", [a for n in range(1, 7) for a in strong_compositions(n)])
def test_coset_reps_are_minimal_and_injective(alpha):
    blocks = block_of_position(alpha)
    reps = set()
    for t in enumerate_tableaux(alpha):
        w = coset_rep(t)
        reps.add(w)
        for p in range(len(w) - 1):
            if blocks[p] == blocks[p + 1]:
                assert w[p] < w[p + 1]
        # w sends the alpha-block of a position to the row holding that value
        for p, v in enumerate(w):
            assert t.row_of(v) == blocks[p]
    assert len(reps) == multinomial(alpha)


@given(st.lists(st.integers(0, 3), min_size=1, max_size=4).filter(lambda a: 0 < sum(a) <= 5))
def test_zero_parts_do_not_change_inversion_counts(parts):
    alpha = tuple(parts)
    strong = tuple(a for a in alpha if a)
    n = sum(alpha)
    weak_counts = sorted(len(springer_inversions(t)) for t in enumerate_tableaux(alpha, n))
    strong_counts = sorted(len(springer_inversions(t)) for t in enumerate_tableaux(strong, n))
    assert weak_counts == strong_counts


@functools.lru_cache(maxsize=None)
def _shapes_up_to(n):
    return [a for k in range(1, n + 1) for a in strong_compositions(k)]


@given(st.data())
def test_compare_is_a_total_order(data):
    alpha = data.draw(st.sampled_from(_shapes_up_to(5)))
    tabs = enumerate_tableaux(alpha)
    a, b, c = (data.draw(st.sampled_from(tabs)) for _ in range(3))
    assert compare(a, a) == 0
    assert compare(a, b) == -compare(b, a)
    if compare(a, b) <= 0 and compare(b, c) <= 0:
        assert compare(a, c) <= 0

"""Named property suites, run by ``eqspringer verify``.

Each suite takes ``(max_n, rng)`` and returns a one-line summary, raising
:class:`CheckFailure` on the first violation.
"""

from __future__ import annotations

import random
from itertools import combinations, product
from math import factorial
from typing import Callable

from .exactpoly import Ambient, Polynomial, divided_difference, lex_compare
from .expand import (
    build_p_delta, equal_in_quotient, evaluate_at_zero, expand_back_substitution,
    expand_determinant, project_monomial,
)
from .schubert import (
    equivariant_schubert_expansion, lehmer_code, length, monk_check, permutation_from_code,
    permutations_of_length, project_polynomial, schubert_polynomial, schubert_transition_matrix,
    w_alpha_set,
)
from .springer import localize, localize_at_permutation, localize_p, p_polynomial, q_factor, shape_data, springer_monomials
from .tableaux import (
    RowStrictTableau, compare, coset_rep, enumerate_tableaux, eta, inversion_vector, multinomial,
    partitions, rearrangements, springer_inversions, strong_compositions, underlying_partition,
)

__all__ = ["CheckFailure", "SUITES", "run_suites", "random_polynomial"]


class CheckFailure(AssertionError):
    pass


def _require(cond: bool, message: str):
    if not cond:
        raise CheckFailure(message)


def random_polynomial(rng: random.Random, ambient: Ambient, max_degree: int = 3, terms: int = 4,
                      x_only: bool = False, homogeneous: int | None = None) -> Polynomial:
    width = ambient.n if x_only else ambient.nvars
    out = {}
    for _ in range(rng.randint(0, terms)):
        d = homogeneous if homogeneous is not None else rng.randint(0, max_degree)
        e = [0] * ambient.nvars
        for _ in range(d):
            e[rng.randrange(width)] += 1
        out[tuple(e)] = rng.randint(-4, 4)
    return Polynomial(out, ambient)


def _shapes(max_n: int, cap: int = 6):
    for n in range(1, min(max_n, cap) + 1):
        yield from strong_compositions(n)


def ring_axioms(max_n, rng):
    count = 0
    for _ in range(60):
        amb = Ambient(rng.randint(1, min(max_n, 8)), rng.randint(0, 4))
        a, b, c = (random_polynomial(rng, amb) for _ in range(3))
        _require((a * b) * c == a * (b * c), "associativity")
        _require(a * (b + c) == a * b + a * c, "distributivity")
        _require(a * b == b * a and a + b == b + a, "commutativity")
        count += 1
    return f"{count} random triples"


def braid_relations(max_n, rng):
    n = max(3, min(max_n, 6))
    amb = Ambient(n)
    for _ in range(30):
        p = random_polynomial(rng, amb, max_degree=6, x_only=True)
        for i in range(1, n - 1):
            d = divided_difference
            _require(d(i, d(i + 1, d(i, p))) == d(i + 1, d(i, d(i + 1, p))), f"braid at {i}")
        for i in range(1, n):
            for j in range(i + 2, n):
                _require(divided_difference(i, divided_difference(j, p)) ==
                         divided_difference(j, divided_difference(i, p)), f"commutation {i},{j}")
            dp = divided_difference(i, p)
            _require(divided_difference(i, dp).is_zero(), "d_i squared")
            _require((dp * (Polynomial.var(f"x{i}", amb) - Polynomial.var(f"x{i+1}", amb))) ==
                     p - p.swap(i, i + 1), "divided difference quotient")
            _require(dp.is_zero() == (p == p.swap(i, i + 1)), "kernel is the symmetric part")
    return "30 random polynomials"


def lex_order(max_n, rng):
    n = min(max_n, 5)
    monos = [e for d in range(5) for e in product(range(d + 1), repeat=n) if sum(e) == d]
    for a in monos:
        for b in monos:
            brute = 0 if a == b else (-1 if a[next(i for i in range(n) if a[i] != b[i])] < b[next(i for i in range(n) if a[i] != b[i])] else 1)
            _require(lex_compare(a, b) == brute, f"lex {a} {b}")
    return f"{len(monos) ** 2} pairs"


def counting(max_n, rng):
    count = 0
    for n in range(1, min(max_n, 7) + 1):
        for a in strong_compositions(n):
            _require(len(enumerate_tableaux(a, n)) == multinomial(a), f"count {a}")
            count += 1
    return f"{count} shapes"


def tableau_order(max_n, rng):
    for a in _shapes(max_n, 5):
        ts = enumerate_tableaux(a)
        gam = [inversion_vector(t) for t in ts]
        for i, j in combinations(range(len(ts)), 2):
            _require(compare(ts[i], ts[j]) == -1 == lex_compare(gam[i], gam[j]), f"order {a}")
        for t in ts:
            _require(compare(t, t) == 0, "reflexive")
    return "recursive order matches lex and generation order"


def trichotomy(max_n, rng):
    for a in _shapes(max_n, 5):
        ts = enumerate_tableaux(a)
        for s, t in combinations(ts, 2):
            js, jt = s.row_of(s.mbar), t.row_of(t.mbar)
            flags = [(s.mbar, jt) in springer_inversions(s), (t.mbar, js) in springer_inversions(t), js == jt]
            _require(sum(flags) == 1, f"trichotomy {s} {t}")
    return "exactly one case per pair"


def eta_bijection(max_n, rng):
    for a in _shapes(max_n, 5):
        n = sum(a)
        for j in range(len(a)):
            image = {eta(t) for t in enumerate_tableaux(a, n) if t.row_of(1) == j + 1}
            smaller = list(a)
            smaller[j] -= 1
            target = set(enumerate_tableaux(tuple(smaller), n)) if sum(smaller) else set()
            if sum(smaller):
                _require(image == target, f"eta image {a} row {j + 1}")
        for t in enumerate_tableaux(a):
            _require(p_polynomial(t) == q_factor(t) * p_polynomial(eta(t), Ambient(n, len(a))), "P = Q P(eta)")
    return "eta is a bijection and P factors"


def coset_minimality(max_n, rng):
    for a in _shapes(max_n, 6):
        reps = set()
        for t in enumerate_tableaux(a):
            w = coset_rep(t)
            p = 0
            for part in a:
                _require(all(w[q] < w[q + 1] for q in range(p, p + part - 1)), "increasing on blocks")
                p += part
            reps.add(w)
        _require(len(reps) == multinomial(a), f"injective {a}")
    return "minimal coset representatives"


def zero_parts(max_n, rng):
    for a in _shapes(max_n, 5):
        for pos in range(len(a) + 1):
            weak = a[:pos] + (0,) + a[pos:]
            ws = enumerate_tableaux(weak)
            ss = enumerate_tableaux(a)
            _require([inversion_vector(t) for t in ws] == [inversion_vector(t) for t in ss], f"zero part {weak}")
    return "upward justification preserves inversion vectors"


def ev_compatibility(max_n, rng):
    for n in range(1, min(max_n, 6) + 1):
        for lam in partitions(n):
            sp = set(springer_monomials(lam).monomials)
            for a in rearrangements(lam):
                sd = shape_data(a)
                evs = {tuple(next(iter(evaluate_at_zero(p).terms))) for p in sd.p}
                _require(evs == sp, f"ev(P) set for {a}")
    return "ev(P) sets equal Springer monomials"


def upper_triangularity(max_n, rng):
    for a in _shapes(max_n, 5):
        ts = shape_data(a).tableaux
        for i, u in enumerate(ts):
            for j, o in enumerate(ts[: i + 1]):
                v = localize_p(u, o)
                _require(v.is_zero() == (j < i), f"triangularity {a} {i} {j}")
    return "localization matrices upper triangular"


def degree_census(max_n, rng):
    for a in _shapes(max_n, 6):
        sd = shape_data(a)
        census = {}
        for d in sd.degrees:
            census[d] = census.get(d, 0) + 1
        _require(census == springer_monomials(underlying_partition(a)).degree_census(), f"census {a}")
    return "degree census matches"


def localization_paths(max_n, rng):
    for a in _shapes(max_n, 4):
        sd = shape_data(a)
        for _ in range(3):
            f = random_polynomial(rng, sd.ambient)
            for t in sd.tableaux:
                _require(localize(f, t) == localize_at_permutation(f, coset_rep(t), a), "two localization paths")
    return "row lookup equals permutation action"


def oracle_equivalence(max_n, rng, samples: int = 10):
    for a in _shapes(max_n, 5):
        amb = shape_data(a).ambient
        for _ in range(samples):
            f = random_polynomial(rng, amb, terms=3, homogeneous=rng.randint(0, 2))
            _require(expand_back_substitution(f, a) == expand_determinant(f, a), f"oracle {a} {f}")
    return f"{samples} inputs per shape"


def reconstruction(max_n, rng):
    for a in _shapes(max_n, 5):
        amb = shape_data(a).ambient
        for _ in range(3):
            f = random_polynomial(rng, amb, max_degree=3)
            _require(equal_in_quotient(expand_back_substitution(f, a).recombine(), f, a), f"reconstruct {a}")
    return "sum C P agrees with the input"


def _monomials(n, max_degree):
    for d in range(max_degree + 1):
        for e in product(range(d + 1), repeat=n - 1):
            if sum(e) == d:
                yield e + (0,)


def support_and_grading(max_n, rng):
    for a in _shapes(max_n, 5):
        sd = shape_data(a)
        for delta in _monomials(sd.n, 3):
            m = sum(delta)
            sym = project_monomial(delta, a, "symbolic")
            _require(sym == project_monomial(delta, a, "specialized"), f"projection routes {a} {delta}")
            for i in sym.support():
                _require(sd.gammas[i] >= delta, f"support bound {a} {delta}")
            eq = expand_back_substitution(build_p_delta(delta, a), a)
            for i, c in enumerate(eq.coefficients):
                if c:
                    _require(c.is_homogeneous() and c.degree() == m - sd.degrees[i], f"grading {a} {delta}")
    return "support bound, grading and route agreement"


def lehmer_minimal(max_n, rng):
    for n in range(1, min(max_n, 6) + 1):
        for w in permutations_of_length(n):
            s = schubert_polynomial(w)
            code = lehmer_code(w)
            low, c = min(s.terms.items())
            _require(low == code and c == 1, f"lex-minimal monomial of {w}")
            _require(permutation_from_code(code) == w, f"code round trip {w}")
    return "lex-minimal term is the Lehmer monomial"


def transition(max_n, rng):
    count = 0
    for a in _shapes(max_n, 6):
        schubert_transition_matrix(a)
        count += 1
    return f"{count} unitriangular transition matrices"


def betti(max_n, rng):
    for a in _shapes(max_n, 6):
        sd = shape_data(a)
        lens = sorted(length(w) for w in w_alpha_set(a))
        _require(lens == sorted(sd.degrees), f"betti {a}")
    return "lengths match degrees"


def monk(max_n, rng):
    n = min(max_n, 4)
    for u in permutations_of_length(n):
        for k in range(1, n):
            _require(monk_check(u, k), f"monk {u} {k}")
    return f"all of S_{n} embedded one step up"


def truncation(max_n, rng):
    for a in _shapes(max_n, 5):
        top = max(shape_data(a).degrees)
        for w in permutations_of_length(sum(a)):
            if length(w) > top:
                _require(not project_polynomial(schubert_polynomial(w), a).support(), f"truncation {a} {w}")
    return "images vanish above the top degree"


def equivariant_compat(max_n, rng):
    for a in _shapes(max_n, 5):
        for w in permutations_of_length(sum(a)):
            if length(w) > 3:
                break
            eq = equivariant_schubert_expansion(w, a).evaluate_at_zero()
            _require(eq == project_polynomial(schubert_polynomial(w), a), f"ev compat {a} {w}")
    return "ev of the equivariant expansion is the ordinary image"


SUITES: dict[str, Callable] = {
    "ring-axioms": ring_axioms,
    "divided-differences": braid_relations,
    "lex-order": lex_order,
    "counting": counting,
    "tableau-order": tableau_order,
    "trichotomy": trichotomy,
    "eta": eta_bijection,
    "coset-reps": coset_minimality,
    "zero-parts": zero_parts,
    "ev-compatibility": ev_compatibility,
    "triangularity": upper_triangularity,
    "degree-census": degree_census,
    "localization-paths": localization_paths,
    "oracle-equivalence": oracle_equivalence,
    "reconstruction": reconstruction,
    "support-grading": support_and_grading,
    "lehmer-minimal": lehmer_minimal,
    "transition": transition,
    "betti": betti,
    "monk": monk,
    "truncation": truncation,
    "equivariant-compat": equivariant_compat,
}


def run_suites(names, max_n: int, seed: int = 0, report=None) -> list[tuple[str, str]]:
    """Run suites in order; stops at (and re-raises) the first failure."""
    out = []
    for name in names:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}")
        summary = SUITES[name](max_n, random.Random(f"{seed}:{name}"))
        out.append((name, summary))
        if report:
            report(name, summary)
    return out

"""Command-line front end.

Exit codes: 0 success, 1 computation failure (including failed verification),
2 usage error (bad arguments, unparsable expressions, invalid shapes).
Structured output goes to stdout and is deterministic; timing goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Sequence

from .exactpoly import Ambient, Polynomial, RationalFunction
from .expand import (
    determinant_data, expand_back_substitution,
    localization_vector,
)
from .parse import ParseError, parse_poly
from .schubert import (
    double_schubert_polynomial, equivariant_schubert_expansion, lehmer_code, length,
    linear_relations, positivity_scan, project_polynomial, schubert_polynomial, code_word,
    w_alpha_set,
)
from .springer import localization_matrix, shape_data, springer_monomials
from .tableaux import (
    RowStrictTableau, ShapeError, as_composition, coset_rep, enumerate_tableaux, inversion_vector,
    is_strong, springer_inversions, underlying_partition,
)
from .springer import p_polynomial

__all__ = ["main", "build_parser", "poly_json", "UsageError"]


class UsageError(ValueError):
    pass


def _frac(c) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def poly_json(p: Polynomial) -> list[dict]:
    out = []
    for e, c in p.items():
        x, z, y = p.ambient.split(e)
        term = {"coefficient": _frac(c), "x": list(x), "z": list(z)}
        if p.ambient.ny:
            term["y"] = list(y)
        out.append(term)
    return out


def _rf_json(r: RationalFunction):
    if r.is_polynomial():
        return poly_json(r.num)
    return {"numerator": poly_json(r.num), "denominator": poly_json(r.denominator)}


def _perm_csv(text: str) -> tuple[int, ...]:
    try:
        w = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad permutation {text!r}") from None
    if sorted(w) != list(range(1, len(w) + 1)):
        raise UsageError(f"{text} is not a permutation in one-line notation")
    return w


def _strong(text: str) -> tuple[int, ...]:
    alpha = as_composition(text)
    if not is_strong(alpha):
        raise ShapeError(f"{text} is not a strong composition")
    return alpha


# known misprints in widely circulated worked examples; surfaced as notes
def _notes_basis(lam) -> list[str]:
    if tuple(lam) == (2, 2):
        return ["x2*x3 is not a Springer monomial for (2,2); the basis has exactly 6 elements"]
    return []


def _notes_expand(f: Polynomial, alpha) -> list[str]:
    if tuple(alpha) == (2, 2):
        typo = parse_poly("x1+x2+x3-2*z1+z2", f.ambient)
        fixed = parse_poly("x1+x2+x3-2*z1-z2", f.ambient)
        if f == typo:
            return ["the sign of z2 matters here: x1+x2+x3-2*z1-z2 is the element equal to P2+P3+P4"]
        if f == fixed:
            return ["x1+x2+x3-2*z1+z2 (opposite sign on z2) is a different element"]
    return []


def _notes_delta(delta, alpha) -> list[str]:
    if tuple(alpha) == (3, 3) and tuple(delta[:5]) == (0, 1, 1, 0, 1):
        return ["the lift of x2*x3*x5 is (x5 - z2)*(x2 - z2)*(x3 - z2); "
                "a factor (x3 - x2) would not vanish at the required fixed points"]
    return []


def _tableau_json(t: RowStrictTableau) -> list[list[int]]:
    return [list(r) for r in t.rows]


def cmd_tableaux(args):
    alpha = as_composition(args.alpha)
    n = sum(alpha) if args.n is None else args.n
    ts = enumerate_tableaux(alpha, n)
    full = is_strong(alpha) and n == sum(alpha)
    k = len(alpha)
    items = []
    for idx, t in enumerate(ts, 1):
        item = {
            "index": idx,
            "rows": _tableau_json(t),
            "inversions": [list(p) for p in sorted(springer_inversions(t))],
            "inversion_vector": list(inversion_vector(t)),
            "P": poly_json(p_polynomial(t, Ambient(n, k))),
        }
        if full:
            item["w"] = list(coset_rep(t))
            item["h"] = [t.row_of(i) for i in range(1, n + 1)]
        items.append(item)
    lines = []
    for it, t in zip(items, ts):
        line = f"{it['index']:>3}  {str(t):<24} P = {p_polynomial(t, Ambient(n, k))}"
        if full:
            w = ",".join(map(str, it["w"]))
            h = ", ".join(f"h{j}" for j in it["h"])
            line += f"   w = [{w}]   h = ({h})"
        lines.append(line)
    return {"alpha": list(alpha), "n": n, "count": len(ts), "tableaux": items}, lines, []


def cmd_basis(args):
    alpha = _strong(args.alpha)
    lam = underlying_partition(alpha)
    sb = springer_monomials(lam)
    sd = shape_data(alpha)
    monos = sb.polynomials()
    result = {
        "alpha": list(alpha), "lambda": list(lam),
        "springer_monomials": [poly_json(m) for m in monos],
        "P": [poly_json(p) for p in sd.p],
    }
    lines = ["Springer monomials: " + ", ".join(str(m) for m in monos)]
    lines += [f"P{i:<3} = {p}" for i, p in enumerate(sd.p, 1)]
    return result, lines, _notes_basis(lam)


def cmd_matrix(args):
    alpha = _strong(args.alpha)
    lm = localization_matrix(alpha)
    result = {"alpha": list(alpha), "size": lm.size,
              "matrix": [[poly_json(e) for e in row] for row in lm.entries]}
    lines = [" | ".join(str(e) for e in row) for row in lm.entries]
    return result, lines, []


def cmd_expand(args):
    alpha = _strong(args.alpha)
    amb = shape_data(alpha).ambient
    f = parse_poly(args.poly, amb)
    result = {"alpha": list(alpha), "method": args.method, "input": poly_json(f),
              "localization": [poly_json(v) for v in localization_vector(f, alpha)]}
    if args.method == "det":
        dd = determinant_data(f, alpha, graded=True)
        coeffs = dd.c
        result["d"] = [_rf_json(d) for d in dd.d]
    else:
        coeffs = expand_back_substitution(f, alpha).coefficients
    result["coefficients"] = [poly_json(c) for c in coeffs]
    lines = [f"C{i:<3} = {c}" for i, c in enumerate(coeffs, 1)]
    return result, lines, _notes_expand(f, alpha)


def _ordinary_lines(exp, n):
    amb = Ambient(n)
    lines = []
    for g, c in zip(exp.monomials, exp.coefficients):
        if c:
            lines.append(f"{_frac(c):>6}  {Polynomial.monomial(g, amb)}")
    return lines or ["0"]


def cmd_project(args):
    alpha = _strong(args.alpha)
    n = sum(alpha)
    notes = []
    if (args.poly is None) == (args.perm is None):
        raise UsageError("project needs exactly one of --poly or --perm")
    if args.perm is not None:
        w = _perm_csv(args.perm)
        if len(w) != n:
            raise UsageError(f"permutation must lie in S_{n}")
        if args.double:
            exp = equivariant_schubert_expansion(w, alpha)
            result = {"alpha": list(alpha), "perm": list(w), "double": True,
                      "coefficients": [poly_json(c) for c in exp.coefficients]}
            lines = [f"C{i:<3} = {c}" for i, c in enumerate(exp.coefficients, 1)]
            return result, lines, notes
        f = schubert_polynomial(w)
        head = {"perm": list(w)}
    else:
        if args.double:
            raise UsageError("--double only applies with --perm")
        f = parse_poly(args.poly, Ambient(n))
        head = {"input": poly_json(f)}
        if len(f) == 1:
            notes = _notes_delta(next(iter(f.terms)), alpha)
    exp = project_polynomial(f, alpha)
    result = {"alpha": list(alpha), **head,
              "image": poly_json(exp.as_polynomial()),
              "coefficients": [_frac(c) for c in exp.coefficients]}
    return result, _ordinary_lines(exp, n), notes


def cmd_walpha(args):
    alpha = _strong(args.alpha)
    perms = w_alpha_set(alpha)
    items = []
    lines = []
    for i, w in enumerate(perms, 1):
        word = code_word(lehmer_code(w))
        items.append({"index": i, "perm": list(w), "code": list(lehmer_code(w)),
                      "length": length(w), "word": word})
        name = "".join(f"s{j}" for j in word) or "e"
        lines.append(f"{i:>3}  [{','.join(map(str, w))}]  {name}")
    return {"alpha": list(alpha), "perms": items}, lines, []


def cmd_schubert(args):
    w = _perm_csv(args.perm)
    p = double_schubert_polynomial(w) if args.double else schubert_polynomial(w)
    return {"perm": list(w), "double": bool(args.double), "polynomial": poly_json(p)}, [str(p)], []


def cmd_positivity(args):
    alpha = _strong(args.alpha)
    rep = positivity_scan(alpha, args.max_length)
    neg = [{"perm": list(w), "index": i, "gamma": list(g), "coefficient": _frac(c)}
           for w, i, g, c in rep.negatives]
    result = {"alpha": list(alpha), "max_length": rep.max_length, "checked": rep.checked,
              "negatives": neg, "positive": rep.positive}
    lines = [f"checked {rep.checked} permutations of length <= {rep.max_length}"]
    lines += [f"negative: w=[{','.join(map(str, d['perm']))}] at tableau {d['index']} "
              f"(x^{tuple(d['gamma'])}): {d['coefficient']}" for d in neg]
    if rep.positive:
        lines.append("no negative coefficients")
    return result, lines, []


def cmd_relations(args):
    alpha = _strong(args.alpha)
    rel = linear_relations(alpha, args.degree)
    result = {"alpha": list(alpha), "degree": args.degree,
              "perms": [list(w) for w in rel.perms],
              "relations": [[_frac(c) for c in v] for v in rel.vectors]}
    lines = []
    for v in rel.vectors:
        terms = [f"{_frac(c)}*S[{','.join(map(str, w))}]" for c, w in zip(v, rel.perms) if c]
        lines.append(" + ".join(terms) + " = 0")
    return result, lines or ["no relations"], []


def cmd_verify(args):
    from .checks import SUITES, CheckFailure, run_suites
    if args.suite:
        names = [args.suite]
        if args.suite not in SUITES:
            raise UsageError(f"unknown suite {args.suite}; choose from {', '.join(SUITES)}")
    else:
        names = list(SUITES)
    results = []
    lines = []
    failed = None
    for name in names:
        try:
            (_, summary), = run_suites([name], args.max_n, args.seed)
            results.append({"suite": name, "ok": True, "summary": summary})
            lines.append(f"PASS {name}: {summary}")
        except CheckFailure as exc:
            results.append({"suite": name, "ok": False, "summary": str(exc)})
            lines.append(f"FAIL {name}: {exc}")
            failed = name
            break
    result = {"max_n": args.max_n, "seed": args.seed, "suites": results, "ok": failed is None}
    return result, lines, [], (1 if failed else 0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="structured output")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized suites")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS, help="no notes or timing")
    parser = argparse.ArgumentParser(prog="eqspringer", parents=[common],
                                     description="Equivariant Springer fiber cohomology computations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    p = add("tableaux", cmd_tableaux, "list tableaux of a shape in total order")
    p.add_argument("--alpha", required=True)
    p.add_argument("--n", type=int)
    add("basis", cmd_basis, "Springer monomials and equivariant basis").add_argument("--alpha", required=True)
    add("matrix", cmd_matrix, "localization matrix").add_argument("--alpha", required=True)
    p = add("expand", cmd_expand, "expand a polynomial in the equivariant basis")
    p.add_argument("--alpha", required=True)
    p.add_argument("--poly", required=True)
    p.add_argument("--method", choices=["back-sub", "det"], default="back-sub")
    p = add("project", cmd_project, "image in ordinary (or, with --double, equivariant) cohomology")
    p.add_argument("--alpha", required=True)
    p.add_argument("--poly")
    p.add_argument("--perm")
    p.add_argument("--double", action="store_true")
    add("walpha", cmd_walpha, "canonical Schubert permutation set").add_argument("--alpha", required=True)
    p = add("schubert", cmd_schubert, "Schubert polynomial of a permutation")
    p.add_argument("--perm", required=True)
    p.add_argument("--double", action="store_true")
    p = add("positivity", cmd_positivity, "scan images of Schubert polynomials for negative coefficients")
    p.add_argument("--alpha", required=True)
    p.add_argument("--max-length", type=int)
    p = add("relations", cmd_relations, "linear relations among images of one length")
    p.add_argument("--alpha", required=True)
    p.add_argument("--degree", type=int, required=True)
    p = add("verify", cmd_verify, "run property suites")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true")
    g.add_argument("--suite")
    p.add_argument("--max-n", type=int, default=5)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)
    args.seed = getattr(args, "seed", 0)
    start = time.perf_counter()
    try:
        out = args.func(args)
    except (UsageError, ShapeError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ArithmeticError, AssertionError, ValueError, KeyError) as exc:
        print(f"computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    result, lines, notes = out[:3]
    code = out[3] if len(out) > 3 else 0
    if as_json:
        report = {"command": args.command, "result": result, "warnings": notes}
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print("\n".join(lines))
        if notes and not quiet:
            for note in notes:
                print(f"note: {note}", file=sys.stderr)
    if not quiet:
        print(f"[{args.command}: {time.perf_counter() - start:.3f}s]", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

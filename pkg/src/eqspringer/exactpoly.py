"""Exact sparse polynomials over Q in three blocks of variables.

Variables are ``x1..xn``, ``z1..zk`` and (optionally) ``y1..y_ny``.  A
polynomial stores a dict from flat exponent tuples to non-zero rational
coefficients; the flat tuple lists the x exponents, then z, then y.  Comparing
two flat tuples with ``<`` is the lexicographic order with
``x1 > x2 > ... > xn > z1 > ... > zk > y1 > ...``.

No relations are imposed between the variables.

>>> amb = Ambient(2, 1)
>>> p = Polynomial.var("x1", amb) - Polynomial.var("z1", amb)
>>> q = Polynomial.var("x2", amb) - Polynomial.var("z1", amb)
>>> print(p * q)
x1*x2 - x1*z1 - x2*z1 + z1^2
>>> print(divide_exact(p * q, p))
x2 - z1
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, NamedTuple, Sequence

__all__ = [
    "Ambient", "Polynomial", "RationalFunction", "AmbientMismatch",
    "InexactDivisionError", "lex_compare", "divided_difference",
    "divide_exact", "rational_solve_divide", "substitute", "add", "mul",
]

_VAR_RE = re.compile(r"^([xzy])(\d+)$")


class AmbientMismatch(ValueError):
    """Raised when two polynomials live in different variable sets."""


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division that must be exact leaves a remainder."""


class Ambient(NamedTuple):
    """Sizes of the variable blocks: ``n`` x's, ``k`` z's, ``ny`` y's."""

    n: int
    k: int = 0
    ny: int = 0

    @property
    def nvars(self) -> int:
        return self.n + self.k + self.ny

    def index(self, name: str) -> int:
        """Flat position of a variable such as ``"z2"``."""
        m = _VAR_RE.match(name)
        if not m:
            raise KeyError(f"not a variable name: {name!r}")
        block, i = m.group(1), int(m.group(2))
        size, offset = {
            "x": (self.n, 0),
            "z": (self.k, self.n),
            "y": (self.ny, self.n + self.k),
        }[block]
        if not 1 <= i <= size:
            raise KeyError(f"variable {name} outside ambient {tuple(self)}")
        return offset + i - 1

    def name(self, idx: int) -> str:
        if idx < self.n:
            return f"x{idx + 1}"
        if idx < self.n + self.k:
            return f"z{idx - self.n + 1}"
        return f"y{idx - self.n - self.k + 1}"

    def split(self, exps: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
        """Split a flat exponent tuple into its (x, z, y) parts."""
        n, k = self.n, self.k
        return tuple(exps[:n]), tuple(exps[n:n + k]), tuple(exps[n + k:])


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _check_coeff(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
    return _norm(Fraction(c)) if not isinstance(c, int) else c


class Polynomial:
    """Immutable sparse polynomial with rational coefficients.

    Coefficients are plain ``int`` when integral and ``Fraction`` otherwise.
    Arithmetic with Python ints and Fractions is supported on either side.
    """

    __slots__ = ("ambient", "_terms", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], Rational] | None = None,
                 ambient: Ambient | Sequence[int] = Ambient(0)):
        ambient = Ambient(*ambient)
        clean: dict[tuple[int, ...], Rational] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != ambient.nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for ambient {tuple(ambient)}")
            c = _check_coeff(c)
            if c:
                c = clean.get(exps, 0) + c
                if c:
                    clean[exps] = c
                else:
                    clean.pop(exps, None)
        self.ambient = ambient
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, ambient: Ambient) -> Polynomial:
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.ambient = ambient
        p._terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ambient) -> Polynomial:
        return cls._raw({}, Ambient(*ambient))

    @classmethod
    def constant(cls, c, ambient) -> Polynomial:
        ambient = Ambient(*ambient)
        c = _check_coeff(c)
        return cls._raw({(0,) * ambient.nvars: c} if c else {}, ambient)

    @classmethod
    def one(cls, ambient) -> Polynomial:
        return cls.constant(1, ambient)

    @classmethod
    def var(cls, name: str, ambient) -> Polynomial:
        ambient = Ambient(*ambient)
        e = [0] * ambient.nvars
        e[ambient.index(name)] = 1
        return cls._raw({tuple(e): 1}, ambient)

    @classmethod
    def monomial(cls, x: Sequence[int], ambient, z: Sequence[int] = (), y: Sequence[int] = (),
                 coeff=1) -> Polynomial:
        """``coeff * x^x * z^z * y^y``; short exponent lists are zero padded."""
        ambient = Ambient(*ambient)
        parts = []
        for block, size in ((x, ambient.n), (z, ambient.k), (y, ambient.ny)):
            block = list(block)
            if len(block) > size:
                if any(block[size:]):
                    raise ValueError(f"exponent list {block} too long for block of size {size}")
                block = block[:size]
            parts.extend(block + [0] * (size - len(block)))
        return cls({tuple(parts): coeff}, ambient)

    # -- basic protocol -----------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, ...], Rational]:
        """A copy of the term dictionary."""
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], Rational]]:
        """Terms in canonical order (lex-largest monomial first)."""
        return sorted(self._terms.items(), reverse=True)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self):
        return self._terms.get((0,) * self.ambient.nvars, 0)

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), 0)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ambient == other.ambient and self._terms == other._terms
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self._terms == ({(0,) * self.ambient.nvars: other} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self):
        return f"Polynomial({str(self)!r}, ambient={tuple(self.ambient)})"

    def __str__(self):
        if not self._terms:
            return "0"
        names = [self.ambient.name(i) for i in range(self.ambient.nvars)]
        out = []
        for exps, c in self.items():
            mono = "*".join(
                names[i] if e == 1 else f"{names[i]}^{e}" for i, e in enumerate(exps) if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            out.append((sign, body))
        first_sign, first = out[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in out[1:]:
            s += f" {sign} {body}"
        return s

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ambient != self.ambient:
                raise AmbientMismatch(f"ambient {tuple(self.ambient)} vs {tuple(other.ambient)}")
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Polynomial.constant(other, self.ambient)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if len(other._terms) > len(self._terms):
            big, small = other._terms, self._terms
        else:
            big, small = self._terms, other._terms
        res = dict(big)
        for e, c in small.items():
            c2 = res.get(e, 0) + c
            if c2:
                res[e] = c2
            else:
                del res[e]
        return Polynomial._raw(res, self.ambient)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self.ambient)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> Polynomial:
        c = _check_coeff(c)
        if not c:
            return Polynomial.zero(self.ambient)
        return Polynomial._raw({e: _norm(v * c) for e, v in self._terms.items()}, self.ambient)

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        res: dict = {}
        get = res.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple([i + j for i, j in zip(ea, eb)])
                res[e] = get(e, 0) + ca * cb
        return Polynomial._raw({e: _norm(c) for e, c in res.items() if c}, self.ambient)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only non-negative integer powers")
        result = Polynomial.one(self.ambient)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.scale(Fraction(1) / Fraction(other))
        return NotImplemented

    # -- degrees ------------------------------------------------------------

    def _block_degree(self, lo: int, hi: int) -> int:
        if not self._terms:
            return -1
        return max(sum(e[lo:hi]) for e in self._terms)

    def degree(self) -> int:
        """Total degree; ``-1`` for the zero polynomial."""
        return self._block_degree(0, self.ambient.nvars)

    def x_degree(self) -> int:
        return self._block_degree(0, self.ambient.n)

    def z_degree(self) -> int:
        n = self.ambient.n
        return self._block_degree(n, n + self.ambient.k)

    def y_degree(self) -> int:
        return self._block_degree(self.ambient.n + self.ambient.k, self.ambient.nvars)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def homogeneous_components(self) -> dict[int, Polynomial]:
        parts: dict[int, dict] = {}
        for e, c in self._terms.items():
            parts.setdefault(sum(e), {})[e] = c
        return {d: Polynomial._raw(t, self.ambient) for d, t in sorted(parts.items())}

    def leading_term(self) -> tuple[tuple[int, ...], Rational]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self._terms)
        return e, self._terms[e]

    def variables(self) -> set[str]:
        used = set()
        for e in self._terms:
            used.update(i for i, v in enumerate(e) if v)
        return {self.ambient.name(i) for i in used}

    # -- substitutions ------------------------------------------------------

    def map_variables(self, target: Sequence[int], ambient=None) -> Polynomial:
        """Monomial substitution: variable ``i`` goes to variable ``target[i]``.

        ``target[i]`` is a flat index in ``ambient`` (defaults to the current
        one) or ``None`` to set that variable to zero.
        """
        ambient = self.ambient if ambient is None else Ambient(*ambient)
        res: dict = {}
        width = ambient.nvars
        for e, c in self._terms.items():
            new = [0] * width
            for i, d in enumerate(e):
                if d:
                    t = target[i]
                    if t is None:
                        break
                    new[t] += d
            else:
                key = tuple(new)
                res[key] = res.get(key, 0) + c
        return Polynomial._raw({e: c for e, c in res.items() if c}, ambient)

    def swap(self, i: int, j: int) -> Polynomial:
        """Exchange the variables ``x_i`` and ``x_j`` (1-based)."""
        target = list(range(self.ambient.nvars))
        target[i - 1], target[j - 1] = j - 1, i - 1
        return self.map_variables(target)

    def embed(self, ambient) -> Polynomial:
        """Same polynomial in a larger ambient (blocks are padded with new variables)."""
        ambient = Ambient(*ambient)
        old = self.ambient
        if ambient.n < old.n or ambient.k < old.k or ambient.ny < old.ny:
            raise AmbientMismatch(f"cannot embed {tuple(old)} into {tuple(ambient)}")
        target = ([i for i in range(old.n)]
                  + [ambient.n + i for i in range(old.k)]
                  + [ambient.n + ambient.k + i for i in range(old.ny)])
        return self.map_variables(target, ambient)

    def evaluate(self, point: Sequence) -> object:
        """Value at ``point``, a sequence with one entry per variable (flat order)."""
        if len(point) != self.ambient.nvars:
            raise ValueError("point has the wrong length")
        total = 0
        for e, c in self._terms.items():
            t = c
            for v, d in zip(point, e):
                if d:
                    t = t * v ** d
            total = total + t
        return _norm(total) if isinstance(total, Fraction) else total


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p._coerce(q) + p


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * p._coerce(q)


def substitute(p: Polynomial, assignment: Mapping[str, Polynomial | Rational]) -> Polynomial:
    """Replace variables by polynomials; unassigned variables stay put.

    >>> amb = Ambient(3, 2)
    >>> x2, z1, z2 = (Polynomial.var(v, amb) for v in ("x2", "z1", "z2"))
    >>> print(substitute(x2 - z2, {"x2": z1}))
    z1 - z2
    """
    amb = p.ambient
    repl: dict[int, Polynomial] = {}
    for name, value in assignment.items():
        if not isinstance(value, Polynomial):
            value = Polynomial.constant(value, amb)
        elif value.ambient != amb:
            raise AmbientMismatch(f"replacement for {name} lives in {tuple(value.ambient)}")
        repl[amb.index(name)] = value
    if not repl:
        return p
    keep = [i not in repl for i in range(amb.nvars)]
    powers: dict[tuple[int, int], Polynomial] = {}
    out = Polynomial.zero(amb)
    for e, c in p._terms.items():
        rest = tuple(d if keep[i] else 0 for i, d in enumerate(e))
        term = Polynomial._raw({rest: c}, amb)
        for i, d in enumerate(e):
            if d and not keep[i]:
                key = (i, d)
                if key not in powers:
                    powers[key] = repl[i] ** d
                term = term * powers[key]
        out = out + term
    return out


def lex_compare(a: Sequence[int], b: Sequence[int]) -> int:
    """Compare exponent vectors: ``-1`` if ``x^a < x^b``, ``0`` if equal, ``1`` otherwise.

    The smaller monomial is the one with the smaller exponent at the first
    index where the vectors differ.
    """
    if len(a) != len(b):
        raise AmbientMismatch("exponent vectors of different length")
    for s, t in zip(a, b):
        if s != t:
            return -1 if s < t else 1
    return 0


def divided_difference(i: int, p: Polynomial) -> Polynomial:
    """Newton divided difference ``(p - s_i p) / (x_i - x_{i+1})``.

    Non-x variables are treated as scalars.  Computed termwise:
    ``x_i^a x_{i+1}^b`` with ``a > b`` maps to
    ``(x_i x_{i+1})^b * sum_{t<a-b} x_i^(a-b-1-t) x_{i+1}^t``.
    """
    n = p.ambient.n
    if not 1 <= i <= n - 1:
        raise IndexError(f"divided difference index {i} outside 1..{n - 1}")
    a_pos, b_pos = i - 1, i
    res: dict = {}
    for e, c in p._terms.items():
        a, b = e[a_pos], e[b_pos]
        if a == b:
            continue
        if a > b:
            lo, gap, sign = b, a - b, 1
        else:
            lo, gap, sign = a, b - a, -1
        base = list(e)
        for t in range(gap):
            base[a_pos] = lo + gap - 1 - t
            base[b_pos] = lo + t
            key = tuple(base)
            res[key] = res.get(key, 0) + sign * c
    return Polynomial._raw({e: c for e, c in res.items() if c}, p.ambient)


def divide_exact(num: Polynomial, den: Polynomial) -> Polynomial:
    """Return ``q`` with ``q * den == num``; raise InexactDivisionError otherwise.

    Multivariate division by lex leading terms.  If the division is exact the
    leading term of the running remainder is always divisible by the leading
    term of ``den``, so the first failure proves a remainder exists.
    """
    den = num._coerce(den)
    if den.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    if num.is_zero():
        return Polynomial.zero(num.ambient)
    dterms = den._terms
    lead_d, lc_d = den.leading_term()
    if len(dterms) == 1:
        inv = Fraction(1) / Fraction(lc_d)
        res = {}
        for e, c in num._terms.items():
            q = tuple(a - b for a, b in zip(e, lead_d))
            if min(q) < 0:
                raise InexactDivisionError(f"{den} does not divide {num}")
            res[q] = _norm(c * inv)
        return Polynomial._raw(res, num.ambient)

    rest = [(e, c) for e, c in dterms.items() if e != lead_d]
    rem = dict(num._terms)
    heap = [tuple(-a for a in e) for e in rem]
    heapq.heapify(heap)
    quot: dict = {}
    while rem:
        key = heapq.heappop(heap)
        e = tuple(-a for a in key)
        c = rem.get(e)
        if c is None:
            continue
        q = tuple(a - b for a, b in zip(e, lead_d))
        if min(q) < 0:
            raise InexactDivisionError(f"{den} does not divide {num}")
        qc = _norm(Fraction(c) / lc_d) if not (isinstance(c, int) and c % lc_d == 0) else c // lc_d
        quot[q] = qc
        del rem[e]
        for ed, cd in rest:
            t = tuple(a + b for a, b in zip(q, ed))
            v = rem.get(t, 0) - qc * cd
            if v:
                if t not in rem:
                    heapq.heappush(heap, tuple(-a for a in t))
                rem[t] = _norm(v)
            else:
                rem.pop(t, None)
    return Polynomial._raw(quot, num.ambient)


def rational_solve_divide(num: Polynomial, den: Polynomial) -> Polynomial:
    """Exact quotient used by the triangular solvers (alias of divide_exact)."""
    return divide_exact(num, den)


def _monic(p: Polynomial) -> tuple[Polynomial, Rational]:
    _, lc = p.leading_term()
    if lc == 1:
        return p, 1
    return p.scale(Fraction(1) / Fraction(lc)), lc


class RationalFunction:
    """Quotient of two polynomials, kept with a factored denominator.

    The denominator is a multiset of lex-monic polynomial factors; scalars
    are pushed into the numerator.  Factors dividing the numerator are
    cancelled on construction, which keeps the fractions met in the
    triangular solves (denominators built from ``z_a - z_b``) reduced.
    Equality is cross-multiplication equality.
    """

    __slots__ = ("num", "_den")

    def __init__(self, num: Polynomial, den: Polynomial | Iterable[Polynomial] | None = None):
        if den is None:
            factors: list[Polynomial] = []
        elif isinstance(den, Polynomial):
            factors = [num._coerce(den)]
        else:
            factors = [num._coerce(d) for d in den]
        scale = Fraction(1)
        monic = []
        for f in factors:
            if f.is_zero():
                raise ZeroDivisionError("zero denominator")
            if f.is_constant():
                scale /= Fraction(f.constant_term())
                continue
            g, lc = _monic(f)
            scale /= Fraction(lc)
            monic.append(g)
        if scale != 1:
            num = num.scale(scale)
        self.num, self._den = self._cancel(num, monic)

    @staticmethod
    def _cancel(num: Polynomial, factors: list[Polynomial]):
        if num.is_zero():
            return num, ()
        kept = []
        for f in factors:
            try:
                num = divide_exact(num, f)
            except InexactDivisionError:
                kept.append(f)
        kept.sort(key=lambda f: sorted(f._terms.items()))
        return num, tuple(kept)

    @classmethod
    def _raw(cls, num, den):
        r = object.__new__(cls)
        r.num, r._den = num, den
        return r

    @property
    def ambient(self):
        return self.num.ambient

    @property
    def factors(self) -> tuple[Polynomial, ...]:
        return self._den

    @property
    def numerator(self) -> Polynomial:
        return self.num

    @property
    def denominator(self) -> Polynomial:
        out = Polynomial.one(self.num.ambient)
        for f in self._den:
            out = out * f
        return out

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self._den

    def to_polynomial(self) -> Polynomial:
        """The polynomial value; raises InexactDivisionError if there is none."""
        if not self._den:
            return self.num
        return divide_exact(self.num, self.denominator)

    def _lift(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            if other.ambient != self.ambient:
                raise AmbientMismatch("rational functions over different ambients")
            return other
        return RationalFunction._raw(self.num._coerce(other), ())

    @staticmethod
    def _merge(a: tuple, b: tuple):
        # multiset lcm of two factor lists and the cofactors for each side
        rem_b = list(b)
        extra_a = []
        for f in a:
            if f in rem_b:
                rem_b.remove(f)
            else:
                extra_a.append(f)
        lcm = list(a) + rem_b
        return lcm, rem_b, extra_a

    def __add__(self, other):
        other = self._lift(other)
        if not self._den and not other._den:
            return RationalFunction._raw(self.num + other.num, ())
        lcm, to_a, to_b = self._merge(self._den, other._den)
        na = self.num
        for f in to_a:
            na = na * f
        nb = other.num
        for f in to_b:
            nb = nb * f
        res = RationalFunction._raw(na + nb, ())
        res.num, res._den = self._cancel(res.num, lcm)
        return res

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self.num, self._den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if self.num.is_zero() or other.num.is_zero():
            return RationalFunction._raw(Polynomial.zero(self.ambient), ())
        num = self.num * other.num
        res = RationalFunction._raw(num, ())
        res.num, res._den = self._cancel(num, list(self._den) + list(other._den))
        return res

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        num = Polynomial.one(self.ambient)
        for f in self._den:
            num = num * f
        return RationalFunction(num, self.num)

    def __truediv__(self, other):
        other = self._lift(other)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __eq__(self, other):
        if isinstance(other, (Polynomial, int, Fraction)):
            other = self._lift(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        lhs = self.num
        for f in other._den:
            lhs = lhs * f
        rhs = other.num
        for f in self._den:
            rhs = rhs * f
        return lhs == rhs

    def __hash__(self):
        if not self._den:
            return hash(self.num)
        return hash((self.num, self._den))

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"

    def __str__(self):
        if not self._den:
            return str(self.num)
        den = "*".join(f"({f})" for f in self._den)
        return f"({self.num})/{den}"

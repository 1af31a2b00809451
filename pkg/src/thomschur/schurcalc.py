"""Schur functions of difference arguments and their structural identities.

Complete functions come from the generating series
``prod_b (1 - b z) / prod_a (1 - a z)``; Schur functions are the
Jacobi-Trudi determinants ``|S_{i_p + p - q}|`` over them.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence

from . import linalg
from .alphabet import Alphabet, DiffArg, Letter, negate_letters
from .partitions import Partition, classify_h, partitions_in_rectangle, partitions_up_to
from .polyring import Lexer, ParseError, Poly


class ShapeError(ValueError):
    """A partition does not fit the required rectangle."""


# -- complete functions --------------------------------------------------------

@dataclass(frozen=True)
class CompleteSeries:
    arg: DiffArg
    values: tuple  # S_0 .. S_max as Poly

    @property
    def max_degree(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, i: int) -> Poly:
        if i < 0:
            return _ZERO
        return self.values[i]


_ZERO = Poly()
_ONE = Poly.const(1)


def complete_series(arg: DiffArg, max_degree: int) -> CompleteSeries:
    """S_0 .. S_max_degree of ``arg``, exactly, by truncated series products."""
    s = [_ONE] + [_ZERO] * max_degree
    for b in arg.minus:
        bp = b.as_poly()
        # multiply by (1 - b z), downward so s[k-1] is still the old value
        for k in range(max_degree, 0, -1):
            if not s[k - 1].is_zero():
                s[k] = s[k] - bp * s[k - 1]
    for a in arg.plus:
        ap = a.as_poly()
        # divide by (1 - a z): s'[k] = s[k] + a s'[k-1]
        for k in range(1, max_degree + 1):
            if not s[k - 1].is_zero():
                s[k] = s[k] + ap * s[k - 1]
    return CompleteSeries(arg, tuple(s))


def jacobi_trudi_degree(I: Partition) -> int:
    """Largest complete-function index the determinant of I needs."""
    return I.largest + len(I) - 1 if len(I) else 0


def schur_from_series(I: Partition, series: CompleteSeries) -> Poly:
    s = len(I)
    if s == 0:
        return _ONE
    if jacobi_trudi_degree(I) > series.max_degree:
        raise ValueError(f"series too short for {I}")
    parts = I.parts
    M = [[series[parts[p] + p - q] for q in range(s)] for p in range(s)]
    d = linalg.det(M)
    return d if isinstance(d, Poly) else Poly.const(d)


def schur(I: Partition, arg: DiffArg) -> Poly:
    """S_I(plus - minus) as a polynomial."""
    I = _as_partition(I)
    return schur_from_series(I, complete_series(arg, jacobi_trudi_degree(I)))


def schur_skew_rectangle(m: int, n: int, I: Partition, arg: DiffArg) -> Poly:
    """Skew Schur function S_{(n^m)/I}, via the complementary partition
    ``(n - i_m, ..., n - i_1)``."""
    I = _as_partition(I)
    if not Partition.rectangle(m, n).contains(I):
        raise ShapeError(f"{I} is not inside the rectangle ({n}^{m})")
    comp = Partition(tuple(n - p for p in reversed(I.padded(m))))
    return schur(comp, arg)


def resultant(A: Alphabet, B: Alphabet) -> Poly:
    """Product of (a - b) over all pairs."""
    out = _ONE
    bs = [b.as_poly() for b in B]
    for a in A:
        ap = a.as_poly()
        for bp in bs:
            out = out * (ap - bp)
    return out


def _as_partition(I) -> Partition:
    return I if isinstance(I, Partition) else Partition(tuple(I))


# -- expansions ----------------------------------------------------------------

class SchurExpansion:
    """Finite linear combination of Schur functions with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict = {}
        for I, c in items:
            I = _as_partition(I)
            acc[I] = acc.get(I, 0) + c
        self.coeffs = {I: _norm(c) for I, c in acc.items() if c != 0}

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, I):
        return self.coeffs.get(_as_partition(I), 0)

    def items(self):
        return self.coeffs.items()

    def __add__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return SchurExpansion(list(self.coeffs.items()) + list(other.coeffs.items()))

    def __neg__(self):
        return SchurExpansion({I: -c for I, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if not isinstance(k, Rational):
            return NotImplemented
        return SchurExpansion({I: k * c for I, c in self.coeffs.items()})

    __rmul__ = __mul__

    def weights(self) -> set:
        return {I.weight for I in self.coeffs}

    def is_homogeneous(self) -> bool:
        return len(self.weights()) <= 1

    def part(self, h: int, r: int) -> "SchurExpansion":
        """The h-part with respect to the row (r)."""
        return SchurExpansion({I: c for I, c in self.coeffs.items() if classify_h(I, r) == h})

    def sorted_terms(self, r: Optional[int] = None) -> list:
        """Canonical order: weight, more parts first, then reverse lexicographic.

        With `r` given the h-parts are listed in increasing h first.
        """
        def key(I):
            base = (I.weight, -len(I), tuple(-p for p in I.parts))
            if r is None:
                return base
            h = classify_h(I, r)
            return ((h if h is not None else 0),) + base
        return sorted(self.coeffs.items(), key=lambda t: key(t[0]))

    def render(self, r: Optional[int] = None) -> str:
        terms = self.sorted_terms(r)
        if not terms:
            return "0"
        out = ""
        for k, (I, c) in enumerate(terms):
            neg = c < 0
            a = -c if neg else c
            coeff = "" if a == 1 else (f"{a} " if not isinstance(a, Fraction) else f"({a}) ")
            txt = f"{coeff}S_{{{I}}}"
            if k == 0:
                out = ("-" if neg else "") + txt
            else:
                out += (" - " if neg else " + ") + txt
        return out

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"SchurExpansion({self.render()!r})"

    def to_json(self, r: Optional[int] = None) -> list:
        return [{"partition": I.to_json(), "coeff": str(c)} for I, c in self.sorted_terms(r)]

    @classmethod
    def from_json(cls, data) -> "SchurExpansion":
        if isinstance(data, str):
            data = json.loads(data)
        return cls((Partition(tuple(t["partition"])), Fraction(t["coeff"])) for t in data)

    @classmethod
    def parse(cls, text: str) -> "SchurExpansion":
        return parse_expansion(text)


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


_EXP_TOKENS = [
    ("SCHUR", r"S_(?:\{[0-9,\s]*\}|\d)"),
    ("NUM", r"\d+(?:/\d+)?"),
    ("OP", r"[-+*()]"),
]


def parse_expansion(text: str) -> SchurExpansion:
    """Read ``S_{1111} + 9 S_{112} - 3S_4 + (1/2) S_{1,10}``.

    A bare coefficient multiplies the following ``S_``; ``S_d`` without braces
    is the one-row partition (d).  ``0`` is the empty expansion.
    """
    lx = Lexer(text, _EXP_TOKENS)
    terms = []
    if lx.peek()[:2] == ("NUM", "0") and lx.tokens[1][0] == "EOF":
        return SchurExpansion()
    first = True
    while True:
        sign = 1
        tok = lx.peek()
        if tok[0] == "OP" and tok[1] in "+-":
            lx.next()
            sign = -1 if tok[1] == "-" else 1
        elif not first:
            lx.fail("'+' or '-'")
        first = False
        coeff = Fraction(1)
        tok = lx.peek()
        if tok[0] == "NUM" or tok[:2] == ("OP", "("):
            if tok[0] == "NUM":
                coeff = Fraction(lx.next()[1])
            else:
                lx.next()
                coeff = Fraction(lx.expect("NUM", "coefficient")[1])
                if lx.peek()[:2] != ("OP", ")"):
                    lx.fail("')'")
                lx.next()
            if lx.peek()[:2] == ("OP", "*"):
                lx.next()
        kind, val, pos = lx.expect("SCHUR", "S_{...}")
        body = val[2:].strip("{}").replace(" ", "")
        try:
            I = Partition.parse(body)
        except ValueError as exc:
            raise ParseError(str(exc), text, pos) from None
        terms.append((I, sign * coeff))
        if lx.peek()[0] == "EOF":
            break
    return SchurExpansion(terms)


def eval_expansion(E: SchurExpansion, arg: DiffArg) -> Poly:
    """Sum of c * S_I(arg), sharing one complete series."""
    if not len(E):
        return _ZERO
    series = complete_series(arg, max(jacobi_trudi_degree(I) for I in E))
    total = _ZERO
    for I, c in E.items():
        total = total + schur_from_series(I, series) * c
    return total


def schur_values(partitions: Sequence[Partition], arg: DiffArg) -> dict:
    """S_I(arg) for many partitions with a shared complete series."""
    if not partitions:
        return {}
    series = complete_series(arg, max(jacobi_trudi_degree(I) for I in partitions))
    return {I: schur_from_series(I, series) for I in partitions}


# -- checks ------------------------------------------------------------------------

@dataclass
class CheckReport:
    """Outcome of an exact identity check; truthy iff it passed."""

    name: str
    passed: bool
    detail: str = ""
    residual: Optional[Poly] = None
    cases: int = 1
    failures: list = field(default_factory=list)

    def __bool__(self):
        return self.passed

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        extra = f" ({self.detail})" if self.detail else ""
        return f"{status} {self.name}{extra}"


def _combine(name: str, checks: Iterable) -> CheckReport:
    cases, failures = 0, []
    for label, ok in checks:
        cases += 1
        if not ok:
            failures.append(label)
    detail = f"{cases} cases" + (f", {len(failures)} failed: {failures[:5]}" if failures else "")
    return CheckReport(name, not failures, detail, cases=cases, failures=failures)


def random_alphabet(rng: random.Random, size: int, variables=("u", "v"), bound: int = 3) -> Alphabet:
    """`size` random nonzero homogeneous linear letters in `variables`."""
    letters = []
    while len(letters) < size:
        coeffs = tuple((v, rng.randint(-bound, bound)) for v in variables)
        a = Letter(0, coeffs)
        if a.coeffs:
            letters.append(a)
    return Alphabet(letters)


def check_cancellation(A: Alphabet, B: Alphabet, C: Alphabet, max_weight: int) -> CheckReport:
    """S_I((A+C) - (B+C)) == S_I(A - B) for all |I| <= max_weight."""
    parts = list(partitions_up_to(max_weight))
    left = schur_values(parts, DiffArg(A + C, B + C))
    right = schur_values(parts, DiffArg(A, B))
    return _combine("cancellation", ((str(I), left[I] == right[I]) for I in parts))


def check_duality(A: Alphabet, B: Alphabet, max_weight: int) -> CheckReport:
    """S_I(A - B) == (-1)^|I| S_J(B - A) == S_J(B* - A*), J conjugate to I."""
    parts = list(partitions_up_to(max_weight))
    direct = schur_values(parts, DiffArg(A, B))
    swapped = schur_values(parts, DiffArg(B, A))
    starred = schur_values(parts, DiffArg(negate_letters(B), negate_letters(A)))

    def ok(I):
        J = I.conjugate()
        sign = -1 if I.weight % 2 else 1
        return direct[I] == swapped[J] * sign and direct[I] == starred[J]

    return _combine("duality", ((str(I), ok(I)) for I in parts))


def check_vanishing(A: Alphabet, B: Alphabet, max_weight: int) -> CheckReport:
    """S_I(A - B) == 0 whenever I leaves the (|A|, |B|)-hook."""
    m, n = len(A), len(B)
    parts = [I for I in partitions_up_to(max_weight) if not I.in_hook(m, n)]
    vals = schur_values(parts, DiffArg(A, B))
    return _combine(f"vanishing({m},{n})", ((str(I), vals[I].is_zero()) for I in parts))


def check_rectangle(A: Alphabet, B: Alphabet) -> CheckReport:
    """R(A, B) == S_{(n^m)}(A - B) == sum_I S_I(A) S_{(n^m)/I}(-B)."""
    m, n = len(A), len(B)
    R = resultant(A, B)
    rect = schur(Partition.rectangle(m, n), DiffArg(A, B))
    empty = Alphabet()
    total = _ZERO
    for I in partitions_in_rectangle(m, n):
        total = total + schur(I, DiffArg(A, empty)) * schur_skew_rectangle(m, n, I, DiffArg(empty, B))
    return _combine(f"rectangle({m},{n})", [("S_rect", R == rect), ("sum", R == total)])


def glued_partition(I: Partition, J: Partition, m: int, n: int) -> Partition:
    """(j_1, ..., j_s, i_1 + n, ..., i_m + n) with I padded to m parts."""
    return Partition(J.parts + tuple(p + n for p in I.padded(m)))


def check_factorization(A: Alphabet, B: Alphabet, max_weight: int) -> CheckReport:
    """S_{(J, I + n)}(A - B) == S_I(A) R(A, B) S_J(-B) for I with at most m
    parts, J with parts at most n, |I| + |J| <= max_weight."""
    m, n = len(A), len(B)
    empty = Alphabet()
    R = resultant(A, B)
    cases = []
    small = list(partitions_up_to(max_weight))
    Is = [I for I in small if len(I) <= m]
    Js = [J for J in small if J.largest <= n]
    sa = schur_values(Is, DiffArg(A, empty))
    sb = schur_values(Js, DiffArg(empty, B))
    glued = {}
    for I, J in product(Is, Js):
        if I.weight + J.weight <= max_weight:
            glued[(I, J)] = glued_partition(I, J, m, n)
    lhs = schur_values(sorted(set(glued.values()), key=lambda P: P.parts), DiffArg(A, B))
    for (I, J), P in glued.items():
        cases.append((f"I={I},J={J}", lhs[P] == sa[I] * R * sb[J]))
    return _combine(f"factorization({m},{n})", cases)


def identity_grid(kind: str, max_size: int = 3, max_weight: int = 5, seed: int = 0) -> list:
    """Run one structural identity over all alphabet sizes up to `max_size`
    with seeded random linear letters.  Returns a list of reports."""
    rng = random.Random(seed)
    reports = []
    sizes = range(max_size + 1)
    if kind == "cancel":
        for a, b, c in product(sizes, repeat=3):
            A, B, C = (random_alphabet(rng, k) for k in (a, b, c))
            rep = check_cancellation(A, B, C, max_weight)
            rep.name = f"cancellation({a},{b},{c})"
            reports.append(rep)
    elif kind == "dual":
        for a, b in product(sizes, repeat=2):
            rep = check_duality(random_alphabet(rng, a), random_alphabet(rng, b), max_weight)
            rep.name = f"duality({a},{b})"
            reports.append(rep)
    elif kind == "vanish":
        for a, b in product(sizes, repeat=2):
            reports.append(check_vanishing(random_alphabet(rng, a), random_alphabet(rng, b), max_weight))
    elif kind == "factor":
        for a, b in product(range(1, max_size + 1), repeat=2):
            reports.append(check_factorization(random_alphabet(rng, a), random_alphabet(rng, b), max_weight))
    elif kind == "rect":
        for a, b in product(range(1, max_size + 1), repeat=2):
            reports.append(check_rectangle(random_alphabet(rng, a), random_alphabet(rng, b)))
    else:
        raise ValueError(f"unknown identity {kind!r}")
    return reports

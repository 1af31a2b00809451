"""The functions F(A, -) and F^(i)_r, restriction equations, and the solver.

Probe letters follow the cotangent sign convention: the A_p probe for
maps with shifted parameter r is ``x - B_{r-1} - [(p+1)x]`` where
``B_{r-1} = b1 + ... + b_{r-1}`` are generic variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Optional, Sequence

from .alphabet import (Alphabet, DiffArg, Letter, boxed, from_integer, generic,
                       letters_of, scale)
from .linalg import Inconsistent, Underdetermined, solve_unique
from .partitions import Partition, classify_h, partitions_in_rectangle, partitions_of
from .polyring import Poly
from .schurcalc import (CheckReport, SchurExpansion, complete_series, eval_expansion,
                        resultant, schur_values)


class CardinalityMismatch(ValueError):
    pass


class NonIntegerSolution(ArithmeticError):
    pass


class NoSolution(ValueError):
    """A residual is not in the span of the correction basis."""


class MissingRow(ValueError):
    pass


class NotSymmetric(ValueError):
    pass


class NotInCatalog(KeyError):
    """No probe data for the requested singularity."""


X = Letter.variable("x")


# -- F functions -----------------------------------------------------------

def F_general(A: Alphabet, m: int, n: int) -> SchurExpansion:
    """Sum over I in (n^m) of S_I(A) S_{n-i_m, ..., n-i_1, n+|I|}."""
    if len(A) != m:
        raise CardinalityMismatch(f"alphabet has {len(A)} letters, expected {m}")
    if not A.is_constant():
        raise ValueError("F_general needs numeric (constant) letters")
    rect = partitions_in_rectangle(m, n)
    coeffs = schur_values(rect, DiffArg(A, Alphabet()))
    terms = []
    for I, c in coeffs.items():
        J = Partition(tuple(n - p for p in reversed(I.padded(m))) + (n + I.weight,))
        terms.append((J, c.constant_term))
    return SchurExpansion(terms)


def boxed_range(lo: int, hi: int) -> Alphabet:
    """[lo] + [lo+1] + ... + [hi]."""
    A = Alphabet()
    for k in range(lo, hi + 1):
        A = A + boxed(k)
    return A


def F_ir(i: int, r: int) -> SchurExpansion:
    if i < 1 or r < 1:
        raise ValueError("need i >= 1 and r >= 1")
    if i == 1:
        return SchurExpansion({Partition((r,)): 1})
    return F_general(boxed_range(2, i), i - 1, r)


def morin_alphabet(i: int) -> Alphabet:
    """x + [2x] + ... + [ix]."""
    return scale(from_integer(1) + boxed_range(2, i), X)


# -- probes -----------------------------------------------------------------------

@dataclass(frozen=True)
class ProbeSpec:
    name: str
    arg: DiffArg
    rhs: Poly = Poly()


def a_probe_arg(p: int, r: int) -> DiffArg:
    """x - B_{r-1} - [px]: the probe of A_{p-1}."""
    return DiffArg(Alphabet([X]), generic("b", r - 1) + boxed(p * X))


def morin_rhs(i: int, r: int) -> Poly:
    """R(x + [2x] + ... + [ix], B_{r-1} + [(i+1)x])."""
    return resultant(morin_alphabet(i), generic("b", r - 1) + boxed((i + 1) * X))


def a_probe(p: int, r: int, rhs: Optional[Poly] = None) -> ProbeSpec:
    return ProbeSpec(f"A{p - 1}({r})", a_probe_arg(p, r), rhs if rhs is not None else Poly())


def I22_probe() -> ProbeSpec:
    x1, x2 = Letter.variable("x1"), Letter.variable("x2")
    return ProbeSpec("I22(1)", DiffArg(letters_of("x1", "x2"), boxed(2 * x1) + boxed(2 * x2)))


def D_alphabet() -> Alphabet:
    """[2x1] + [2x2] + [x1 + x2]."""
    x1, x2 = Letter.variable("x1"), Letter.variable("x2")
    return boxed(2 * x1) + boxed(2 * x2) + boxed(Letter(0, (("x1", 1), ("x2", 1))))


def III22_probe() -> ProbeSpec:
    return ProbeSpec("III22(2)", DiffArg(letters_of("x1", "x2"), D_alphabet()))


# Sigma^2-type singularities of codimension <= i*r, only where tabulated.
SIGMA2_PROBES: dict = {
    (4, 1): [I22_probe],
    (3, 2): [III22_probe],
}


def covered(i: int, r: int) -> bool:
    return i in (1, 2) or (i, r) in {(3, 1), (3, 2), (4, 1)}


def probes_for(i: int, r: int, sigma2: bool = True) -> list:
    """Restriction-equation probes for A_i(r): A_0..A_{i-1} vanish, A_i gives
    the Euler class.  With ``sigma2=False`` the Sigma^2 probes are left out."""
    if i < 1 or r < 1:
        raise ValueError("need i >= 1 and r >= 1")
    if not covered(i, r):
        raise NotInCatalog(f"no probe data for A{i}({r})")
    probes = [a_probe(p, r) for p in range(1, i + 1)]
    probes.append(a_probe(i + 1, r, morin_rhs(i, r)))
    if sigma2:
        probes.extend(build() for build in SIGMA2_PROBES.get((i, r), []))
    return probes


# -- identity checks --------------------------------------------------------------

def check_FBr(i: int, r: int) -> CheckReport:
    """F^(i)_r(x - B_r) == R(x + [2x] + ... + [ix], B_r)."""
    B = generic("b", r)
    lhs = eval_expansion(F_ir(i, r), DiffArg(Alphabet([X]), B))
    rhs = resultant(morin_alphabet(i), B)
    return CheckReport(f"FBr(i={i},r={r})", lhs == rhs, residual=lhs - rhs)


def check_CF(i: int, r: int, p: int) -> CheckReport:
    """Vanishing at x - B_{r-1} - [px] for p <= i; Euler class at p = i+1."""
    if not 1 <= p <= i + 1:
        raise ValueError("need 1 <= p <= i+1")
    val = eval_expansion(F_ir(i, r), a_probe_arg(p, r))
    target = morin_rhs(i, r) if p == i + 1 else Poly()
    return CheckReport(f"CF(i={i},r={r},p={p})", val == target, residual=val - target)


def euler_Ai(i: int, k: int) -> Poly:
    """i! x^i prod_j (y_j - ix) ... (y_j - x)."""
    x = Poly.var("x")
    out = factorial(i) * x ** i
    for j in range(1, k + 1):
        y = Poly.var(f"y{j}")
        for m in range(1, i + 1):
            out = out * (y - m * x)
    return out


def check_fid(i: int, k: int) -> CheckReport:
    """i!(-x)^i prod_j (ix - y_j)...(x - y_j) == R(x + [2x] + ... + [ix], Y_k + [(i+1)x]),
    and the left side is the Euler class with all roots negated."""
    x = Poly.var("x")
    lhs = factorial(i) * (-x) ** i
    for j in range(1, k + 1):
        y = Poly.var(f"y{j}")
        for m in range(1, i + 1):
            lhs = lhs * (m * x - y)
    rhs = resultant(morin_alphabet(i), generic("y", k) + boxed((i + 1) * X))
    flipped = euler_Ai(i, k).substitute(
        {"x": -x, **{f"y{j}": -Poly.var(f"y{j}") for j in range(1, k + 1)}})
    ok = lhs == rhs and lhs == flipped
    return CheckReport(f"fid(i={i},k={k})", ok, residual=lhs - rhs)


def _series_inverse(p: Poly, degree: int) -> Poly:
    """1/p truncated at `degree`, for p with constant term 1."""
    if p.constant_term != 1:
        raise ValueError("need constant term 1")
    q = 1 - p
    out, power = Poly.const(1), Poly.const(1)
    for _ in range(degree):
        power = power * q
        power = sum((power.graded_component(d) for d in range(degree + 1)), Poly())
        out = out + power
    return sum((out.graded_component(d) for d in range(degree + 1)), Poly())


def _chern_check(name: str, arg: DiffArg, numer: list, denom: list, flip: dict, degree: int) -> CheckReport:
    """Compare S_k(arg) with the degree-k part of prod(numer)/prod(denom)
    after the sign change `flip` (tangent -> cotangent roots)."""
    top = Poly.const(1)
    for f in numer:
        top = top * f
    bottom = Poly.const(1)
    for f in denom:
        bottom = bottom * f
    total = (top * _series_inverse(bottom, degree)).substitute(flip)
    series = complete_series(arg, degree)
    bad = [k for k in range(degree + 1) if series[k] != total.graded_component(k)]
    return CheckReport(name, not bad, f"degrees 0..{degree}" + (f", mismatch at {bad}" if bad else ""))


def chern_crosscheck(i: int, r: int, degree: Optional[int] = None) -> list:
    """Complete series of the probe arguments against the total Chern classes
    c(A_i), c(I22), c(III22) read in cotangent roots."""
    t = Poly.var("t")
    ys = [Poly.var(f"y{j}") for j in range(1, r)]
    flip = {"t": -Poly.var("x"), **{f"y{j}": -Poly.var(f"b{j}") for j in range(1, r)}}
    reports = [_chern_check(
        f"c(A{i}) r={r}", a_probe_arg(i + 1, r),
        [1 + (i + 1) * t] + [1 + y for y in ys], [1 + t], flip,
        degree if degree is not None else i * r)]
    if (i, r) == (4, 1):
        reports.append(chern_check_I22())
    if (i, r) == (3, 2):
        reports.append(chern_check_III22())
    return reports


def _x12():
    return Poly.var("x1"), Poly.var("x2")


def chern_check_I22(degree: int = 4) -> CheckReport:
    x1, x2 = _x12()
    return _chern_check("c(I22)", I22_probe().arg, [1 + 2 * x1, 1 + 2 * x2],
                        [1 + x1, 1 + x2], {"x1": -x1, "x2": -x2}, degree)


def chern_check_III22(degree: int = 6) -> CheckReport:
    x1, x2 = _x12()
    return _chern_check("c(III22)", III22_probe().arg, [1 + 2 * x1, 1 + 2 * x2, 1 + x1 + x2],
                        [1 + x1, 1 + x2], {"x1": -x1, "x2": -x2}, degree)


# -- verification and solving ----------------------------------------------------

@dataclass
class ThomResult:
    expansion: SchurExpansion
    verified_against: list
    unique: bool
    rank: Optional[int]
    singularity: str = ""
    r: Optional[int] = None
    failures: dict = field(default_factory=dict)  # probe name -> residual Poly

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "singularity": self.singularity,
            "r": self.r,
            "expansion": self.expansion.to_json(self.r),
            "rank": self.rank,
            "verified": list(self.verified_against),
            "unique": self.unique,
        }


def rank(E: SchurExpansion, r: int) -> int:
    hs = []
    for I in E:
        h = classify_h(I, r)
        if h is None:
            raise MissingRow(f"S_{{{I}}} does not contain the row ({r})")
        hs.append(h)
    if not hs:
        raise ValueError("rank of the zero expansion is undefined")
    return max(hs)


def _safe_rank(E: SchurExpansion, r: Optional[int]) -> Optional[int]:
    if r is None:
        return None
    try:
        return rank(E, r)
    except (MissingRow, ValueError):
        return None


def verify_thom(candidate: SchurExpansion, probes: Sequence[ProbeSpec],
                r: Optional[int] = None, singularity: str = "") -> ThomResult:
    """Evaluate `candidate` at each probe and compare with its right-hand side."""
    if not candidate.is_homogeneous():
        raise ValueError("candidate is not weight-homogeneous")
    passed, failures = [], {}
    for probe in probes:
        residual = eval_expansion(candidate, probe.arg) - probe.rhs
        if residual.is_zero():
            passed.append(probe.name)
        else:
            failures[probe.name] = residual
    return ThomResult(candidate, passed, False, _safe_rank(candidate, r), singularity, r, failures)


def default_basis(i: int, r: int, all_partitions: bool = False) -> list:
    """Partitions of weight i*r, restricted to those containing the row (r)."""
    parts = list(partitions_of(i * r))
    if not all_partitions:
        parts = [I for I in parts if I.largest >= r]
    return parts


def _assemble(basis: Sequence[Partition], probes: Sequence[ProbeSpec], targets: Sequence[Poly]):
    """Rows of the coefficient-matching system: one per (probe, monomial)."""
    A, b = [], []
    for probe, target in zip(probes, targets):
        vals = schur_values(list(basis), probe.arg)
        coeffs = {I: vals[I].as_dict() for I in basis}
        rhs = target.as_dict()
        monos = set(rhs)
        for d in coeffs.values():
            monos.update(d)
        for mono in sorted(monos):
            A.append([coeffs[I].get(mono, 0) for I in basis])
            b.append(rhs.get(mono, 0))
    return A, b


def solve_thom(i: int, r: int, probes: Optional[Sequence[ProbeSpec]] = None,
               basis: Optional[Sequence[Partition]] = None,
               all_partitions: bool = False) -> ThomResult:
    """Solve the restriction equations for T^{A_i}_r exactly.

    Raises Underdetermined / Inconsistent when the probe set does not pin down
    a unique answer, NonIntegerSolution if the answer is not integral.
    """
    if probes is None:
        probes = probes_for(i, r)
    if basis is None:
        basis = default_basis(i, r, all_partitions)
    basis = list(basis)
    A, b = _assemble(basis, probes, [p.rhs for p in probes])
    sol = solve_unique(A, b)
    if any(c.denominator != 1 for c in sol):
        raise NonIntegerSolution(f"non-integer solution {sol}")
    E = SchurExpansion(zip(basis, sol))
    check = verify_thom(E, probes, r, f"A{i}")
    if check.failures:
        raise AssertionError(f"solution fails its own probes: {sorted(check.failures)}")
    check.unique = True
    return check


def h_part_correction(candidate: SchurExpansion, probe: ProbeSpec,
                      correction_basis: Sequence[Partition],
                      other_probes: Iterable[ProbeSpec] = ()) -> dict:
    """Coefficients c_J with  rhs - candidate(probe) == sum_J c_J S_J(probe).

    Each J must vanish at every probe in `other_probes` by the hook criterion.
    """
    basis = list(correction_basis)
    for other in other_probes:
        m, n = len(other.arg.plus), len(other.arg.minus)
        inside = [J for J in basis if J.in_hook(m, n)]
        if inside:
            raise ValueError(f"{inside} do not vanish at {other.name} by the hook criterion")
    residual = probe.rhs - eval_expansion(candidate, probe.arg)
    if residual.is_zero():
        return {}
    A, b = _assemble(basis, [probe], [residual])
    try:
        sol = solve_unique(A, b)
    except Inconsistent:
        raise NoSolution(f"residual at {probe.name} is outside the span of {basis}") from None
    out = {}
    for J, c in zip(basis, sol):
        if c:
            out[J] = c.numerator if c.denominator == 1 else c
    return out


# -- Schur expansion of symmetric polynomials --------------------------------------

def schur_expand(p: Poly, N: int, variables: Optional[Sequence[str]] = None) -> SchurExpansion:
    """Expand a symmetric polynomial in N variables in Schur polynomials by
    peeling off graded-lex leading terms."""
    from .polyring import var_key
    names = tuple(variables) if variables is not None else tuple(f"x{k}" for k in range(1, N + 1))
    if len(names) != N:
        raise ValueError("need exactly N variable names")
    names = tuple(sorted(names, key=var_key))
    stray = p.variables - set(names)
    if stray:
        raise ValueError(f"unexpected variables {sorted(stray)}")
    if p.degree() > N:
        raise ValueError(f"degree {p.degree()} exceeds the number of variables {N}")
    arg = DiffArg(letters_of(*names), Alphabet())
    series_cache = {}
    out: dict = {}
    rem = p
    while not rem.is_zero():
        mono, c = rem.leading_term()
        exps = dict(mono)
        vec = [exps.get(v, 0) for v in names]
        if any(a < b for a, b in zip(vec, vec[1:])):
            raise NotSymmetric(f"leading monomial {mono} is not dominant")
        I = Partition(tuple(reversed([e for e in vec if e])))
        if I not in series_cache:
            series_cache[I] = schur_values([I], arg)[I]
        out[I] = out.get(I, 0) + c
        rem = rem - series_cache[I] * c
    return SchurExpansion(out)


def complete_in_variables(k: int, N: int) -> Poly:
    """h_k(x1, ..., xN)."""
    return complete_series(DiffArg(generic("x", N), Alphabet()), k)[k]

"""Acceptance criteria 1-7, all exact.  A summary line per criterion is
printed at the end of the run."""

import time

import pytest

from oracles import bialternant_check, elementary
from thomschur.alphabet import DiffArg, generic
from thomschur.partitions import Partition, partitions_up_to
from thomschur.polyring import Poly
from thomschur.schurcalc import SchurExpansion, eval_expansion, identity_grid, parse_expansion, schur
from thomschur.thom import (F_ir, I22_probe, III22_probe, check_CF, check_FBr, check_fid,
                            h_part_correction, probes_for, rank, solve_thom)

P = Partition
x1, x2 = Poly.var("x1"), Poly.var("x2")
Q = x1 * x2 * (x1 - 2 * x2) * (x2 - 2 * x1)


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def canonical(text):
    return parse_expansion(text).render()


# -- 1 ---------------------------------------------------------------------------

GOLDEN = {
    (3, 1): "S_{111}+5S_{12}+6S_3",
    (3, 2): "S_{222}+5S_{123}+6S_{114}+19S_{24}+30S_{15}+36S_6",
    (4, 1): "S_{1111}+9S_{112}+26S_{13}+24S_4",
    (4, 2): "S_{2222}+9S_{1223}+26S_{1124}+24S_{1115}+55S_{224}+210S_{125}+216S_{116}"
            "+391S_{26}+555S_{17}+507S_8",
}


@pytest.mark.parametrize("i, r", list(GOLDEN))
def test_c1_golden_expansion(criterion, i, r):
    E, secs = timed(F_ir, i, r)
    got, want = E.render(), canonical(GOLDEN[(i, r)])
    ok = got == want and secs < 1
    criterion(1, f"F({i},{r})", ok, "" if ok else f"got {got}")
    assert got == want
    assert secs < 1


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c1_F2_rule(criterion, r):
    E, secs = timed(F_ir, 2, r)
    want = SchurExpansion({P((r - j, r + j)): 2 ** j for j in range(r + 1)})
    ok = E == want and secs < 1
    criterion(1, f"F(2,{r}) rule", ok)
    assert ok


def test_c1_F_i1_rule_at_5(criterion):
    E, secs = timed(F_ir, 5, 1)
    values = [2, 3, 4, 5]
    want = SchurExpansion({P((1,) * (4 - j) + (j + 1,)): elementary(values, j) for j in range(5)})
    ok = E == want and secs < 1
    criterion(1, "F(5,1) rule", ok)
    assert ok


# -- 2 ---------------------------------------------------------------------------

def test_c2_identity_suite(criterion):
    t0 = time.perf_counter()
    failures = []
    for i in range(1, 5):
        for r in range(1, 4):
            failures += [c.name for c in [check_FBr(i, r)] if not c]
            failures += [c.name for c in (check_CF(i, r, p) for p in range(1, i + 2)) if not c]
    for i in range(1, 4):
        for k in range(3):
            failures += [c.name for c in [check_fid(i, k)] if not c]
    for kind, weight in [("cancel", 5), ("dual", 5), ("vanish", 8), ("factor", 5), ("rect", 0)]:
        failures += [c.name for c in identity_grid(kind, max_size=3, max_weight=weight) if not c]
    secs = time.perf_counter() - t0
    ok = not failures and secs < 60
    criterion(2, "suite", ok, f"{failures[:5]} in {secs:.1f}s")
    assert not failures
    assert secs < 60


# -- 3 ---------------------------------------------------------------------------

def test_c3_A41_pipeline(criterion):
    arg = I22_probe().arg
    val = eval_expansion(F_ir(4, 1), arg)
    ok_eval = val == -10 * Q
    ones = {"x1": 1, "x2": 1}
    spec = {I: schur(P(I), arg).eval_at(ones) for I in [(1, 1, 1, 1), (1, 1, 2), (1, 3), (4,)]}
    factor = sum(c * spec[I] for I, c in [((1, 1, 1, 1), 1), ((1, 1, 2), 9), ((1, 3), 26), ((4,), 24)])
    ok_spec = spec == {(1, 1, 1, 1): 28, (1, 1, 2): -4, (1, 3): -1, (4,): 1} and factor == -10
    ok_spec = ok_spec and Q.eval_at(ones) == 1
    corr = h_part_correction(F_ir(4, 1), I22_probe(), [P((2, 2))], probes_for(4, 1, sigma2=False))
    res = solve_thom(4, 1)
    want = parse_expansion("S_{1111}+9S_{112}+26S_{13}+24S_4+10S_{22}")
    checks = [("eval at I22", ok_eval), ("x1=x2=1", ok_spec), ("correction", corr == {P((2, 2)): 10}),
              ("solve", res.expansion == want and res.unique)]
    for label, ok in checks:
        criterion(3, label, ok)
    assert all(ok for _, ok in checks), checks


# -- 4 ---------------------------------------------------------------------------

def test_c4_A32_pipeline(criterion):
    residual = eval_expansion(F_ir(3, 2), III22_probe().arg) - III22_probe().rhs
    corr = h_part_correction(F_ir(3, 2), III22_probe(), [P((3, 3))], probes_for(3, 2, sigma2=False))
    res = solve_thom(3, 2)
    want = parse_expansion("S_{222}+5S_{123}+6S_{114}+19S_{24}+30S_{15}+36S_6+5S_{33}")
    checks = [("residual", residual == -5 * x1 * x2 * Q),
              ("correction", corr == {P((3, 3)): 5}),
              ("solve", res.expansion == want and res.unique),
              ("rank", res.rank == 2 and rank(res.expansion, 2) == 2)]
    for label, ok in checks:
        criterion(4, label, ok)
    assert all(ok for _, ok in checks), checks


# -- 5 ---------------------------------------------------------------------------

@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_c5_classical(criterion, r):
    a1 = solve_thom(1, r)
    a2 = solve_thom(2, r)
    ok1 = a1.expansion == SchurExpansion({P((r,)): 1}) and a1.unique
    ok2 = a2.expansion == SchurExpansion({P((r - j, r + j)): 2 ** j for j in range(r + 1)}) and a2.unique
    criterion(5, f"A1({r})", ok1)
    criterion(5, f"A2({r})", ok2)
    assert ok1 and ok2


# -- 6 ---------------------------------------------------------------------------

SOLVABLE = [(1, r) for r in range(1, 5)] + [(2, r) for r in range(1, 5)] + [(3, 1), (3, 2), (4, 1)]


@pytest.mark.parametrize("i, r", SOLVABLE)
def test_c6_structure(criterion, i, r):
    E = solve_thom(i, r).expansion
    checks = [
        ("weight", E.weights() == {i * r}),
        ("row (r)", all(I.contains(P((r,))) for I in E)),
        ("nonnegative integers", all(isinstance(c, int) and c >= 0 for _, c in E.items())),
        ("rank", i < 2 or rank(E, r) <= i - 1),
        ("1-part", E.part(1, r) == F_ir(i, r)),
    ]
    for label, ok in checks:
        criterion(6, f"A{i}({r}) {label}", ok)
    assert all(ok for _, ok in checks), checks


# -- 7 ---------------------------------------------------------------------------

@pytest.mark.parametrize("N", [1, 2, 3, 4])
def test_c7_bialternant(criterion, N):
    names = [f"x{k}" for k in range(1, N + 1)]
    arg = DiffArg(generic("x", N))
    bad = [str(I) for I in partitions_up_to(6)
           if not bialternant_check(tuple(reversed(I.parts)), names, schur(I, arg))]
    criterion(7, f"N={N}", not bad, str(bad))
    assert not bad

"""Acceptance suite: ten end-to-end criteria with runtime budgets.

Run under pytest (a pass/fail line per criterion is printed in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import contextlib
import io
import json
import math
import os
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

import pytest

from twophoton import bialgebra as bi
from twophoton.algebra import BASIS, jacobi_residual
from twophoton.cli import main as cli_main
from twophoton.eigenstates import EigenProblem, matrix_residual, ode_from_problem, solve_series
from twophoton.fockrep import check_relations, make_rep, to_number_basis
from twophoton.quantum import (CoproductTable, RMatrixSpec, coassoc_check, hom_check,
                               intertwine_check, qybe_check, semiclassical_check)
from twophoton.scalars import Poly

CORPUS = Path(__file__).resolve().parents[1] / "corpus"
RESULTS: dict = {}


def _rat(rng, lo=-1, hi=1, den=12, nonzero=False):
    while True:
        d = rng.randint(1, den)
        x = Fraction(rng.randint(lo * d, hi * d), d)
        if x or not nonzero:
            return x


def _record(num, title, ok, elapsed, budget, detail=""):
    ok = ok and (budget is None or elapsed < budget)
    limit = f" (limit {budget:g} s)" if budget else ""
    RESULTS[num] = f"criterion {num:2d} {'PASS' if ok else 'FAIL'}  {title}: {elapsed:.2f} s{limit}" + (
        f"  [{detail}]" if detail else "")
    return ok


# 1 ---------------------------------------------------------------------------

def criterion_1():
    t = time.perf_counter()
    res = jacobi_residual()
    bad = [names for names, r in res if not r.is_zero()]
    ok = len(res) == 20 and not bad
    return _record(1, "Jacobi residuals of 20 basis triples", ok, time.perf_counter() - t, 1,
                   f"nonzero: {bad}" if bad else "")


# 2 ---------------------------------------------------------------------------

def criterion_2():
    t = time.perf_counter()
    p = bi.BialgebraParams.symbolic()
    bad = [g for g in BASIS if bi.cocommutator(p, g) != bi.cocommutator_from_table(p, g)]
    return _record(2, "general cocommutator golden table", not bad, time.perf_counter() - t, 10,
                   f"mismatch: {bad}" if bad else "")


# 3 ---------------------------------------------------------------------------

def criterion_3():
    t = time.perf_counter()
    p = bi.BialgebraParams.symbolic()
    pairs = [(BASIS[i], BASIS[j]) for i in range(6) for j in range(i + 1, 6)]
    bad = [pr for pr in pairs if not bi.cocycle_residual(p, *pr).is_zero()]
    ok = len(pairs) == 15 and not bad
    return _record(3, "symbolic 1-cocycle identity", ok, time.perf_counter() - t, 30,
                   f"nonzero: {bad}" if bad else "")


# 4 ---------------------------------------------------------------------------

def family_draw(kind, rng):
    r = lambda nz=False: _rat(rng, -3, 3, 7, nonzero=nz)
    if kind == "I-standard":
        return bi.family(kind, c1=r(), c2=r(True))
    if kind == "I-nonstandard":
        return bi.family(kind, c1=r())
    if kind == "II":
        return bi.type_ii_params(r(True), r(), r(), a3=r(), b3=r())
    if kind == "III-standard":
        return bi.family(kind, a2=r(), a3=r(), a4=r(), c2=r(True))
    return bi.family(kind, a2=r(), a4=r(), a5=r())


def criterion_4(draws=50):
    t = time.perf_counter()
    rng = random.Random(4)
    problems = []
    for kind in bi.FAMILY_KINDS:
        for _ in range(draws):
            p = family_draw(kind, rng)
            rep = bi.classification_residuals(p)
            disc = bi.discriminant(p)
            if any(rep.residuals):
                problems.append(f"{kind}: residual")
            if kind.endswith("nonstandard") and disc:
                problems.append(f"{kind}: discriminant {disc}")
            if kind in ("I-standard", "III-standard") and not disc:
                problems.append(f"{kind}: zero discriminant")
            if rep.verdict != bi.family_verdict(kind, p):
                problems.append(f"{kind}: verdict {rep.verdict}")
            if any(not x.is_zero() for x in bi.mybe_invariance_residual(p)):
                problems.append(f"{kind}: mYBE")
            prim = bi.FAMILY_PRIMITIVE[kind]
            if prim not in rep.primitive or "M" not in rep.primitive:
                problems.append(f"{kind}: primitive {rep.primitive}")
    return _record(4, f"family audit, {draws} draws x 5 families", not problems,
                   time.perf_counter() - t, 60, "; ".join(problems[:3]))


# 5 ---------------------------------------------------------------------------

def criterion_5():
    t = time.perf_counter()
    p = bi.BialgebraParams.symbolic()
    q = bi.automorphism_params(p)
    rp, rq = bi.classification_residuals(p), bi.classification_residuals(q)
    checks = {
        "involution": bi.automorphism_params(q) == p,
        "generator involution": all(bi.automorphism_map(bi.automorphism_map(bi._gen(g))) == bi._gen(g)
                                    for g in BASIS),
        "A<->B": rq.set_a == rp.set_b and rq.set_b == rp.set_a,
        "C invariant": rq.set_c == rp.set_c,
        "discriminant invariant": bi.discriminant(q) == bi.discriminant(p),
        "r invariant": bi.automorphism_tensor(bi.build_r(q)) == bi.build_r(p),
    }
    bad = [k for k, v in checks.items() if not v]
    return _record(5, "automorphism audit (symbolic)", not bad, time.perf_counter() - t, None,
                   ", ".join(bad))


# 6 ---------------------------------------------------------------------------

def number_state_columns(kind, a, dim, guard):
    """Largest deviation between the number-basis matrices and the closed action series."""
    mats = to_number_basis(make_rep(kind, dim, a))
    a = float(a)
    worst = 0.0
    for m in range(dim - guard + 1):
        want = {g: [0.0] * dim for g in ("N", "A-", "B+", "B-")}
        root = lambda k: math.sqrt(math.factorial(m + k) / math.factorial(m))
        for k in range(dim - m):
            want["A-"][m + k] += m * a ** (k + 1) / math.factorial(k + 1) * root(k)
            want["N"][m + k] += m * a ** k / math.factorial(k + 1) * root(k)
            want["B-"][m + k] += m * (m - 1) * a ** (k + 2) / math.factorial(k + 2) * root(k)
        if m >= 1:
            want["A-"][m - 1] += math.sqrt(m)
            want["B-"][m - 1] += a * math.sqrt(m) * (m - 1)
        if m >= 2:
            want["B-"][m - 2] += math.sqrt(m * (m - 1))
        for k in range(dim - m - 2):
            want["B+"][m + k + 2] += ((-2 + 2 ** (k + 2)) * (-a) ** k / math.factorial(k + 2)
                                      * root(k + 2))
        for g, col in want.items():
            for i in range(dim):
                worst = max(worst, abs(mats[g][i, m] - col[i]))
    return worst


def criterion_6(samples=20):
    t = time.perf_counter()
    rng = random.Random(6)
    bad = []
    worst = 0.0
    for dim in (8, 10, 12):
        if not check_relations(make_rep("classical", dim), 4, raise_on_failure=False).ok:
            bad.append(f"classical D={dim}")
        for kind in ("ua1", "ua2"):
            for _ in range(samples):
                a = _rat(rng, nonzero=True)
                rep = make_rep(kind, dim, a)
                if not check_relations(rep, 4, raise_on_failure=False).ok:
                    bad.append(f"{kind} D={dim} a={a}")
    for _ in range(samples):
        a = _rat(rng, nonzero=True)
        worst = max(worst, number_state_columns("ua1", a, 12, 4))
    if worst > 1e-12:
        bad.append(f"number-state deviation {worst:.2e}")
    return _record(6, "representation audit", not bad, time.perf_counter() - t, 120,
                   "; ".join(bad[:3]) or f"max number-state deviation {worst:.1e}")


# 7 ---------------------------------------------------------------------------

def criterion_7(samples=20):
    t = time.perf_counter()
    rng = random.Random(6)
    bad = []
    for dim in (8, 10, 12):
        for kind in ("classical", "ua1", "ua2"):
            params = [0] if kind == "classical" else [_rat(rng, nonzero=True) for _ in range(samples)]
            for a in params:
                small, big = make_rep(kind, dim, a), make_rep(kind, dim + 8, a)
                keep = dim - 4
                for g in small.matrices:
                    # a/b == c/d  <=>  a*d == c*b, entrywise
                    x = small[g].num[:keep, :keep] * big[g].den
                    y = big[g].num[:keep, :keep] * small[g].den
                    if (x != y).any():
                        bad.append(f"{kind} D={dim} a={a} {g}")
    return _record(7, "truncation growth D vs D+8", not bad, time.perf_counter() - t, None,
                   "; ".join(bad[:3]))


# 8 ---------------------------------------------------------------------------

def criterion_8(samples=10):
    t = time.perf_counter()
    rng = random.Random(8)
    bad = []
    for kind in ("ua1", "ua2"):
        table, spec = CoproductTable.for_kind(kind), RMatrixSpec(kind)
        for _ in range(samples):
            a = _rat(rng, -2, 2, nonzero=True)
            rep6 = make_rep(kind, 6, a)
            reports = [
                hom_check(table, rep6, 2, raise_on_failure=False),
                coassoc_check(table, make_rep(kind, 5, a), 2, raise_on_failure=False),
                qybe_check(spec, make_rep(kind, 4, a), raise_on_failure=False),
                intertwine_check(spec, table, rep6, 2, raise_on_failure=False),
            ]
            bad += [f"{r.check} {kind} a={a}" for r in reports if not r.ok]
        if not semiclassical_check(kind, 4, raise_on_failure=False).ok:
            bad.append(f"semiclassical {kind}")
    return _record(8, "quantum audit", not bad, time.perf_counter() - t, 180, "; ".join(bad[:3]))


# 9 ---------------------------------------------------------------------------

def hand_recurrence(b, lam, c0, c1, n):
    """The classical ODE recurrence written out term by term."""
    b1, b2, b3, b4, b5 = b
    c = [c0, c1]
    for k in range(n - 1):
        s = b1 * k * c[k] + b4 * (k + 1) * c[k + 1] - lam * c[k]
        if k >= 2:
            s += b3 * c[k - 2]
        if k >= 1:
            s += b5 * c[k - 1]
        c.append(-s / (b2 * (k + 2) * (k + 1)))
    return c


def _const(x):
    return x.constant_term() if isinstance(x, Poly) else x


def criterion_9(samples=25):
    t = time.perf_counter()
    rng = random.Random(9)
    bad = []
    for _ in range(5):
        b = [_rat(rng, -2, 2) for _ in range(5)]
        b[1] = _rat(rng, -2, 2, nonzero=True)
        lam, c0, c1 = _rat(rng, -3, 3), _rat(rng), _rat(rng)
        sol = solve_series(ode_from_problem(EigenProblem("classical", b, lam, 40)), c0, c1, 40)
        if sol.coeffs != hand_recurrence(b, lam, c0, c1, 40):
            bad.append("hand recurrence")
    for kind in ("classical", "ua1", "ua2"):
        for _ in range(samples):
            b = [_rat(rng, -2, 2) for _ in range(5)]
            b[1] = _rat(rng, -2, 2, nonzero=True)
            prob = EigenProblem(kind, b, _rat(rng, -3, 3), 20, _rat(rng, nonzero=True))
            sol = solve_series(ode_from_problem(prob), _rat(rng), _rat(rng), 20)
            if any(sol.residual) or not matrix_residual(prob, sol, 28, raise_on_failure=False).ok:
                bad.append(f"matrix residual {kind}")
    for kind, var in (("ua1", "a1"), ("ua2", "a2")):
        b = [Fraction(1, 2), Fraction(1), Fraction(-1, 3), Fraction(2), Fraction(1)]
        classical = solve_series(ode_from_problem(EigenProblem("classical", b, 1, 16)), 1, 1, 16)
        deformed = solve_series(ode_from_problem(
            EigenProblem(kind, b, 1, 16, Poly.var(var, (var,)))), 1, 1, 16)
        zero = solve_series(ode_from_problem(EigenProblem(kind, b, 1, 16, 0)), 1, 1, 16)
        if [_const(x) for x in deformed.coeffs] != classical.coeffs or zero.coeffs != classical.coeffs:
            bad.append(f"{kind} -> 0 limit")
    return _record(9, "eigenstate audit", not bad, time.perf_counter() - t, 60, "; ".join(bad[:3]))


# 10 --------------------------------------------------------------------------

def run_cli(argv, cwd=CORPUS):
    out, err = io.StringIO(), io.StringIO()
    old = os.getcwd()
    os.chdir(cwd)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = cli_main(list(argv))
    finally:
        os.chdir(old)
    return code, out.getvalue()


def criterion_10():
    t = time.perf_counter()
    jobs = json.loads((CORPUS / "manifest.json").read_text())["jobs"]
    bad = []
    kinds = set()
    for job in jobs:
        first, second = run_cli(job["argv"]), run_cli(job["argv"])
        if first != second:
            bad.append(f"{job['name']}: not deterministic")
        if first[0] != job["exit"]:
            bad.append(f"{job['name']}: exit {first[0]} != {job['exit']}")
        argv = job["argv"]
        if argv and argv[0] in ("verify", "rmatrix", "eigenstate"):
            kinds.add(argv[1])
        if argv and argv[0] == "family":
            kinds.add(argv[1].split("-")[0])
        if argv and argv[0] == "classify" and first[0] == 0:
            echoed = json.loads(first[1])["params"]
            code, again = run_cli(["classify", json.dumps(echoed)])
            if code != 0 or json.loads(again)["params"] != echoed:
                bad.append(f"{job['name']}: round trip")
    missing = {"I", "II", "III", "ua1", "ua2"} - kinds
    if missing:
        bad.append(f"corpus lacks {sorted(missing)}")
    return _record(10, f"CLI corpus ({len(jobs)} jobs)", not bad, time.perf_counter() - t, 30,
                   "; ".join(bad[:3]))


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_acceptance(criterion):
    ok = criterion()
    num = CRITERIA.index(criterion) + 1
    print(RESULTS[num])
    assert ok, RESULTS[num]


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    for k in sorted(RESULTS):
        print(RESULTS[k])
    sys.exit(0 if all(results) else 1)

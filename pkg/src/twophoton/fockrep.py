"""Truncated one-boson representations of h6, U_a1(h6) and U_a2(h6).

Matrices act on the Bargmann monomial basis ``e_m = alpha**m``, ``m < D``:
the creation operator is the shift ``e_m -> e_{m+1}`` and the annihilation
operator is ``d/dalpha``, ``e_m -> m e_{m-1}``. Each generator is a
differential operator ``sum_k c_k(alpha) d^k/dalpha^k`` whose coefficient
functions are entire, so its matrix has exact rational entries for rational
deformation parameters and every entry equals the corresponding entry of
the untruncated operator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import numpy as np

from .errors import VerificationError
from .expr import Context
from .matrices import Matrix, nilpotent_series
from .scalars import to_scalar
from .series import Series, exp_series, expm1_over
from .tables import GENERATORS, KINDS, RELATIONS

__all__ = [
    "TruncRep", "boson_ops", "nilpotent_series", "rep_classical", "rep_ua1", "rep_ua2",
    "make_rep", "bargmann_operators", "ua2_functions", "check_relations", "to_number_basis",
    "guarded_indices",
]


def boson_ops(dim: int):
    """Creation (shift) and annihilation (derivative) matrices in the monomial basis."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    up = Matrix.zeros(dim)
    down = Matrix.zeros(dim)
    for m in range(dim - 1):
        up.num[m + 1, m] = 1
        down.num[m, m + 1] = m + 1
    return up, down


def ua2_functions(a2, n: int) -> Dict[str, Series]:
    """Regularized coefficient functions of the U_a2 realization, ``n`` terms each.

    With ``x = 2 a2 t**2``:

    * ``N``:     ``(e^x - 1)/(2 a2 t)``
    * ``A+``:    ``((1 - e^-x)/(2 a2))**(1/2)``, branch ``+t`` near 0
    * ``A-``:    ``e^x/t * A+(t)``
    * ``B-``:    ``(e^x - 1)/x`` on ``d^2`` and ``e^x/t + (1 - e^x)/(2 a2 t^3)`` on ``d``

    Removable poles are cancelled on the Laurent series, never by division.
    """
    m = n + 4
    expm1_pos = expm1_over(2 * a2, 2, m)
    expm1_neg = expm1_over(-2 * a2, 2, m)
    e2 = exp_series(2 * a2, 2, m)
    psi_sq = expm1_neg                      # (1 - e^-x)/(2 a2) = t^2 (1 + ...)
    psi = psi_sq.shift(-2).regular().sqrt().shift(1)
    first = e2.shift(-1) - expm1_pos.shift(-3)
    out = {
        "N": expm1_pos.shift(-1),
        "A+": psi,
        "A-": e2 * psi.shift(-1),
        "B-2": expm1_pos.shift(-2),
        "B-1": first,
    }
    for key, ser in out.items():
        ser.label = key
        out[key] = ser.regular(n).with_label(key)
    return out


def bargmann_operators(kind: str, param, n: int) -> Dict[str, Dict[int, Series]]:
    """Generators as ``{derivative order: coefficient series}`` with ``n`` terms."""
    t = Series.monomial(1, n)
    one = Series.constant(Fraction(1), n)
    if kind == "classical":
        return {
            "N": {1: t}, "A+": {0: t}, "A-": {1: one},
            "B+": {0: Series.monomial(2, n)}, "B-": {2: one}, "M": {0: one},
        }
    a = param
    if kind == "ua1":
        e = exp_series(a, 1, n)
        b = expm1_over(-a, 1, n)            # (1 - e^{-a t})/a
        return {
            "N": {1: expm1_over(a, 1, n)}, "A+": {0: t}, "A-": {1: e},
            "B+": {0: b * b}, "B-": {2: e}, "M": {0: one},
        }
    if kind == "ua2":
        f = ua2_functions(a, n)
        return {
            "N": {1: f["N"]}, "A+": {0: f["A+"]}, "A-": {1: f["A-"]},
            "B+": {0: Series.monomial(2, n)}, "B-": {2: f["B-2"], 1: f["B-1"]},
            "M": {0: one},
        }
    raise ValueError(f"unknown representation kind {kind!r}")


def _operator_matrix(terms: Dict[int, Series], up: Matrix, down: Matrix) -> Matrix:
    dim = up.shape[0]
    out = Matrix.zeros(dim)
    for order, coeffs in terms.items():
        lower = Matrix.identity(dim)
        for _ in range(order):
            lower = lower @ down
        out = out + nilpotent_series(coeffs, up) @ lower
    return out


@dataclass
class TruncRep:
    kind: str
    param: object
    dim: int
    matrices: Dict[str, Matrix] = field(repr=False)

    def __getitem__(self, name: str) -> Matrix:
        return self.matrices[name]

    def context(self) -> Context:
        return Context(self.matrices, self.param, self.dim)


def make_rep(kind: str, dim: int, param=0) -> TruncRep:
    if kind not in KINDS:
        raise ValueError(f"unknown representation kind {kind!r}")
    if dim < 4:
        raise ValueError("representations need D >= 4")
    param = to_scalar(param) if not isinstance(param, float) else param
    if kind == "classical":
        param = Fraction(0)
    up, down = boson_ops(dim)
    ops = bargmann_operators(kind, param, dim)
    mats = {g: _operator_matrix(ops[g], up, down) for g in GENERATORS}
    return TruncRep(kind, param, dim, mats)


def rep_classical(dim: int) -> TruncRep:
    return make_rep("classical", dim)


def rep_ua1(dim: int, a1) -> TruncRep:
    return make_rep("ua1", dim, a1)


def rep_ua2(dim: int, a2) -> TruncRep:
    return make_rep("ua2", dim, a2)


def guarded_indices(dim: int, guard: int) -> List[int]:
    return list(range(dim - guard))


@dataclass
class RelationReport:
    kind: str
    dim: int
    guard: int
    param: object
    failures: List[dict] = field(default_factory=list)
    checked: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def check_relations(rep: TruncRep, guard: int = 4, raise_on_failure: bool = True) -> RelationReport:
    """Verify every commutation relation of ``rep.kind`` on the guarded block.

    The block is ``0 <= i, j <= D-1-guard``; outside it the truncation may
    break identities that hold for the untruncated operators.
    """
    if guard < 2 or rep.dim <= guard:
        raise ValueError("need guard >= 2 and D > guard")
    ctx = rep.context()
    idx = guarded_indices(rep.dim, guard)
    report = RelationReport(rep.kind, rep.dim, guard, rep.param)
    for x, y, rhs in RELATIONS[rep.kind]:
        X, Y = rep[x], rep[y]
        lhs = X @ Y - Y @ X
        value = ctx.evaluate(rhs)
        name = f"[{x},{y}]"
        report.checked.append(name)
        bad = lhs.differences(value, idx)
        if bad:
            i, j, l, r = max(bad, key=lambda b: max(b[0], b[1]))
            report.failures.append({"relation": name, "count": len(bad),
                                    "max_index": max(i, j), "lhs": l, "rhs": r})
    if raise_on_failure and report.failures:
        raise VerificationError(report.failures[0]["relation"], report)
    return report


def to_number_basis(rep: TruncRep) -> Dict[str, np.ndarray]:
    """Float matrices in the number-state basis ``|m> = e_m / sqrt(m!)``."""
    scale = np.array([math.sqrt(math.factorial(m)) for m in range(rep.dim)])
    out = {}
    for g, mat in rep.matrices.items():
        f = mat.to_float()
        out[g] = (scale[:, None] * f) / scale[None, :]
    return out

"""Power-series eigenfunctions of ``b1 N + b2 B- + b3 B+ + b4 A- + b5 A+``.

In the Bargmann realization the eigenvalue equation ``H f = lam f`` becomes
a linear second-order ODE ``p2 f'' + p1 f' + p0 f = 0`` in ``alpha``. The
coefficients are expanded at ``alpha = 0`` and the equation is solved by
the usual Cauchy-product recurrence.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, SingularPointError, VerificationError
from .fockrep import make_rep
from .matrices import Matrix
from .scalars import Poly, format_scalar, to_scalar
from .series import Series, exp_series, expm1_over

KINDS = ("classical", "ua1", "ua2")
BETA_GENERATORS = ("N", "B-", "B+", "A-", "A+")


def _scalar(x):
    if isinstance(x, (float, Poly)):
        return x
    return to_scalar(x)


@dataclass(frozen=True)
class EigenProblem:
    kind: str
    betas: Tuple
    lam: object
    n: int = 20
    param: object = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise DomainError(f"unknown kind {self.kind!r}")
        if len(self.betas) != 5:
            raise DomainError("need exactly five coefficients b1..b5")
        if self.n < 4:
            raise DomainError("truncation order must be at least 4")
        object.__setattr__(self, "betas", tuple(_scalar(b) for b in self.betas))
        object.__setattr__(self, "lam", _scalar(self.lam))
        param = Fraction(0) if self.kind == "classical" else _scalar(self.param)
        object.__setattr__(self, "param", param)

    @property
    def is_float(self) -> bool:
        return any(isinstance(x, float) for x in (*self.betas, self.lam, self.param))


@dataclass
class ODESpec:
    p2: List
    p1: List
    p0: List

    def __post_init__(self):
        if not len(self.p2) == len(self.p1) == len(self.p0):
            raise ValueError("coefficient series must have equal length")

    @property
    def ordinary(self) -> bool:
        return bool(self.p2[0])

    @property
    def first_order(self) -> bool:
        return not any(self.p2)

    def to_json(self) -> dict:
        return {k: [format_scalar(c) for c in getattr(self, k)] for k in ("p2", "p1", "p0")}


def _coeffs(s: Series, n: int) -> List:
    return s.regular(n).coeffs


def ode_from_problem(p: EigenProblem) -> ODESpec:
    """Taylor coefficients (``n + 1`` of each) of the ODE for ``p``."""
    b1, b2, b3, b4, b5 = p.betas
    n = p.n + 1
    m = n + 4
    t = Series.monomial(1, m)
    one = Series.constant(Fraction(1), m)
    if p.kind == "classical":
        p2 = one * b2
        p1 = t * b1 + one * b4
        p0 = Series.monomial(2, m) * b3 + t * b5 - p.lam
    elif p.kind == "ua1":
        a = p.param
        e = exp_series(a, 1, m)
        sq = expm1_over(-a, 1, m)
        p2 = e * b2
        p1 = expm1_over(a, 1, m) * b1 + e * b4
        p0 = (sq * sq) * b3 + t * b5 - p.lam
    else:
        a = p.param
        ex = exp_series(2 * a, 2, m)                       # e^{2 a alpha^2}
        g = expm1_over(2 * a, 2, m).shift(-2).regular()   # (e^x - 1)/x
        root = expm1_over(-2 * a, 2, m).shift(-2).regular().sqrt()  # psi/alpha
        p2 = g * b2
        # (e^x - 1)/(2 a alpha) = alpha g ; e^x psi/alpha ; (e^x - g)/alpha
        p1 = g.shift(1) * b1 + (ex * root) * b4 + (ex - g).shift(-1) * b2
        p0 = Series.monomial(2, m) * b3 + root.shift(1) * b5 - p.lam
    return ODESpec(_coeffs(p2, n), _coeffs(p1, n), _coeffs(p0, n))


@dataclass
class SeriesSolution:
    coeffs: List
    residual: List
    c0: object
    c1: object
    first_order: bool = False

    @property
    def residual_norm(self) -> float:
        vals = [float(abs(r)) if not isinstance(r, Poly) else (0.0 if not r else math.inf)
                for r in self.residual]
        return max(vals, default=0.0)

    def to_json(self) -> dict:
        return {
            "coefficients": [format_scalar(c) for c in self.coeffs],
            "residual_norm": self.residual_norm,
            "c0": format_scalar(self.c0),
            "c1": format_scalar(self.c1),
            "first_order": self.first_order,
        }


def _div(x, d):
    if isinstance(d, Poly):
        if not d.is_constant():
            raise DomainError("leading ODE coefficient must be a constant")
        d = d.constant_term()
    return x / d


def ode_residual(spec: ODESpec, c: Sequence, upto: int) -> List:
    """Coefficients ``0..upto`` of ``p2 f'' + p1 f' + p0 f`` for the polynomial ``f = sum c_k alpha^k``."""
    out = []
    for k in range(upto + 1):
        s = 0
        for i in range(k + 1):
            j = k - i
            if spec.p2[i] and j + 2 < len(c):
                s = s + spec.p2[i] * ((j + 2) * (j + 1)) * c[j + 2]
            if spec.p1[i] and j + 1 < len(c):
                s = s + spec.p1[i] * (j + 1) * c[j + 1]
            if spec.p0[i] and j < len(c):
                s = s + spec.p0[i] * c[j]
        out.append(s)
    return out


def solve_series(spec: ODESpec, c0=1, c1=0, n: Optional[int] = None) -> SeriesSolution:
    """Coefficients ``c_0..c_n`` of the power-series solution with ``f(0)=c0``, ``f'(0)=c1``.

    Needs an ordinary point at 0; with ``p2 = 0`` the equation is first order,
    needs ``p1(0) != 0`` and ``c1`` is ignored.
    """
    n = len(spec.p2) - 1 if n is None else n
    if n > len(spec.p2) - 1:
        raise ValueError(f"ODE spec only has {len(spec.p2)} coefficients")
    c0 = _scalar(c0)
    c1 = _scalar(c1)
    first = spec.first_order
    if first:
        if not spec.p1[0]:
            raise SingularPointError("p2 vanishes and p1(0) = 0: alpha = 0 is a singular point")
        c = [c0] + [0] * n
        for k in range(n):
            s = 0
            for i in range(1, k + 1):
                s = s + spec.p1[i] * (k - i + 1) * c[k - i + 1]
            for i in range(k + 1):
                s = s + spec.p0[i] * c[k - i]
            c[k + 1] = _div(-s, spec.p1[0] * (k + 1))
    else:
        if not spec.p2[0]:
            raise SingularPointError("p2(0) = 0: alpha = 0 is a singular point")
        c = [c0, c1] + [0] * (n - 1)
        for k in range(n - 1):
            s = 0
            for i in range(1, k + 1):
                s = s + spec.p2[i] * ((k - i + 2) * (k - i + 1)) * c[k - i + 2]
            for i in range(k + 1):
                s = s + spec.p1[i] * (k - i + 1) * c[k - i + 1]
                s = s + spec.p0[i] * c[k - i]
            c[k + 2] = _div(-s, spec.p2[0] * ((k + 2) * (k + 1)))
    residual = ode_residual(spec, c, n - 2)
    return SeriesSolution(c, residual, c0, c1, first)


def solve(p: EigenProblem, c0=1, c1=0) -> SeriesSolution:
    return solve_series(ode_from_problem(p), c0, c1, p.n)


def check_residual(sol: SeriesSolution, rel_tol: float = 1e-12) -> bool:
    """Exact zero for rational solutions, relative tolerance for float ones."""
    if not any(isinstance(r, float) for r in sol.residual):
        return not any(sol.residual)
    scale = max((abs(float(x)) for x in sol.coeffs), default=1.0) or 1.0
    return sol.residual_norm <= rel_tol * scale


@dataclass
class MatrixResidual:
    dim: int
    rows: List
    ok: bool
    first_failure: Optional[int] = None

    def to_json(self) -> dict:
        return {"D": self.dim, "ok": self.ok, "first_failure": self.first_failure,
                "rows": [format_scalar(r) for r in self.rows]}


def matrix_residual(p: EigenProblem, sol: SeriesSolution, dim: int,
                    rel_tol: float = 1e-12, raise_on_failure: bool = True) -> MatrixResidual:
    """Apply ``H - lam`` in the truncated monomial basis to the solution vector.

    Rows ``0..n-2`` only see ``c_0..c_n`` (``H`` lowers degrees by at most 2),
    so they must vanish.
    """
    n = len(sol.coeffs) - 1
    if dim < n + 4:
        raise ValueError("matrix residual needs D >= n + 4")
    if p.is_float:
        param = Fraction(p.param)
        rep = make_rep(p.kind, dim, param)
        h = sum(float(b) * rep[g].to_float() for b, g in zip(p.betas, BETA_GENERATORS))
        vec = np.zeros(dim)
        vec[: n + 1] = [float(x) for x in sol.coeffs]
        res = h @ vec - float(p.lam) * vec
        rows = list(res[: n - 1])
        scale = max(np.max(np.abs(vec)), 1.0)
        bad = [i for i, r in enumerate(rows) if abs(r) > rel_tol * scale * max(1.0, np.max(np.abs(h)))]
    else:
        rep = make_rep(p.kind, dim, p.param)
        h = Matrix.zeros(dim)
        for b, g in zip(p.betas, BETA_GENERATORS):
            if b:
                h = h + rep[g].scale(b)
        if any(isinstance(x, Poly) for x in sol.coeffs):
            raise DomainError("matrix residual needs rational coefficients")
        col = Matrix.from_rows([[x] for x in sol.coeffs] + [[0]] * (dim - n - 1))
        res = h @ col - col.scale(p.lam)
        rows = [res.entry(i, 0) for i in range(n - 1)]
        bad = [i for i, r in enumerate(rows) if r]
    out = MatrixResidual(dim, rows, not bad, bad[0] if bad else None)
    if raise_on_failure and bad:
        raise VerificationError(f"matrix residual row {bad[0]}", out)
    return out

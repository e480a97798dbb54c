"""Expression trees for operator formulas in the deformed algebras.

Trees are built from generators, the identity, sums, ordered products,
scalar multiples ``c * a**k`` (``a`` being the deformation parameter of
the evaluation context) and entire functions of a single operator. Tensor
nodes pair two trees and are evaluated as Kronecker products.

The same tree can be evaluated on a representation (:func:`evaluate`), or
pushed through a coproduct table as an algebra homomorphism
(:func:`coproduct_of`).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Tuple

from .matrices import Matrix, nilpotent_series
from .series import exp_series, expm1_over


class Expr:
    def __add__(self, other):
        return Sum((self, other))

    def __sub__(self, other):
        return Sum((self, Scaled(-1, 0, other)))

    def __neg__(self):
        return Scaled(-1, 0, self)

    def __matmul__(self, other):
        return Prod((self, other))

    def __rmul__(self, c):
        return Scaled(c, 0, self)


@dataclass(frozen=True)
class Gen(Expr):
    name: str

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class One(Expr):
    def __str__(self):
        return "1"


@dataclass(frozen=True)
class Zero(Expr):
    def __str__(self):
        return "0"


@dataclass(frozen=True)
class Scaled(Expr):
    """``coeff * a**power * body``."""
    coeff: object
    power: int
    body: Expr

    def __str__(self):
        a = "" if self.power == 0 else ("a*" if self.power == 1 else f"a^{self.power}*")
        return f"{self.coeff}*{a}({self.body})"


@dataclass(frozen=True)
class Sum(Expr):
    terms: Tuple[Expr, ...]

    def __str__(self):
        return " + ".join(str(t) for t in self.terms)


@dataclass(frozen=True)
class Prod(Expr):
    factors: Tuple[Expr, ...]

    def __str__(self):
        return " ".join(f"({f})" for f in self.factors)


@dataclass(frozen=True)
class Fn(Expr):
    """An entire function of ``arg`` with Taylor coefficients in ``m * a``.

    ``name`` is ``"exp"`` for ``exp(m*a*x)`` or ``"expm1"`` for
    ``(exp(m*a*x) - 1)/(m*a)``, which stays finite at ``a = 0``.
    """
    name: str
    mult: object
    arg: Expr

    def series(self, a, n: int):
        c = Fraction(self.mult) * a if not isinstance(a, float) else float(self.mult) * a
        if self.name == "exp":
            return exp_series(c, 1, n)
        if self.name == "expm1":
            return expm1_over(c, 1, n)
        raise ValueError(f"unknown function {self.name!r}")

    def __str__(self):
        if self.name == "exp":
            return f"exp({self.mult}*a*{self.arg})"
        return f"(exp({self.mult}*a*{self.arg})-1)/({self.mult}*a)"


@dataclass(frozen=True)
class Tensor(Expr):
    left: Expr
    right: Expr

    def __str__(self):
        return f"({self.left})⊗({self.right})"


def gens(*names):
    return tuple(Gen(n) for n in names)


def scaled_power(a, k: int):
    return Fraction(1) if k == 0 else a ** k


class Context:
    """Evaluation context: generator matrices, deformation parameter and dimension."""

    def __init__(self, matrices: Dict[str, Matrix], param, dim: int):
        self.matrices = matrices
        self.param = param
        self.dim = dim
        self._cache: Dict[Expr, Matrix] = {}

    def evaluate(self, e: Expr) -> Matrix:
        hit = self._cache.get(e)
        if hit is not None:
            return hit
        out = self._eval(e)
        self._cache[e] = out
        return out

    def _eval(self, e: Expr) -> Matrix:
        if isinstance(e, Gen):
            return self.matrices[e.name]
        if isinstance(e, One):
            return Matrix.identity(self.dim)
        if isinstance(e, Zero):
            return Matrix.zeros(self.dim)
        if isinstance(e, Scaled):
            return self.evaluate(e.body).scale(e.coeff).scale(scaled_power(self.param, e.power))
        if isinstance(e, Sum):
            out = self.evaluate(e.terms[0])
            for t in e.terms[1:]:
                out = out + self.evaluate(t)
            return out
        if isinstance(e, Prod):
            out = self.evaluate(e.factors[0])
            for f in e.factors[1:]:
                out = out @ self.evaluate(f)
            return out
        if isinstance(e, Fn):
            arg = self.evaluate(e.arg)
            return nilpotent_series(e.series(self.param, arg.shape[0]), arg)
        if isinstance(e, Tensor):
            return self.evaluate(e.left).kron(self.evaluate(e.right))
        raise TypeError(f"cannot evaluate {e!r}")


class CoproductContext(Context):
    """Evaluates trees after applying the coproduct as an algebra homomorphism.

    Generators are replaced by their coproduct (a tensor tree evaluated in
    ``base``); identity, sums, products and functions are mapped
    structurally, so ``Delta(f(X)) = f(Delta(X))``.
    """

    def __init__(self, base: Context, table: Dict[str, Expr]):
        super().__init__({}, base.param, base.dim ** 2)
        self.base = base
        self.table = table

    def _eval(self, e: Expr) -> Matrix:
        if isinstance(e, Gen):
            return self.base.evaluate(self.table[e.name])
        if isinstance(e, Tensor):
            raise TypeError("apply the coproduct to single-leg expressions only")
        return super()._eval(e)


def coproduct_of(e: Expr, base: Context, table: Dict[str, Expr]) -> Matrix:
    return CoproductContext(base, table).evaluate(e)


def map_tensor_legs(e: Expr, left: Callable[[Expr], Matrix], right: Callable[[Expr], Matrix], scale_param):
    """Evaluate a tensor-level tree with custom evaluators for each leg."""
    if isinstance(e, Tensor):
        return left(e.left).kron(right(e.right))
    if isinstance(e, Scaled):
        return map_tensor_legs(e.body, left, right, scale_param).scale(e.coeff).scale(
            scaled_power(scale_param, e.power))
    if isinstance(e, Sum):
        parts = [map_tensor_legs(t, left, right, scale_param) for t in e.terms]
        out = parts[0]
        for p in parts[1:]:
            out = out + p
        return out
    raise TypeError(f"{e!r} is not a tensor-level expression")


def flip(e: Expr) -> Expr:
    """Swap the legs of every tensor node (the opposite coproduct)."""
    if isinstance(e, Tensor):
        return Tensor(e.right, e.left)
    if isinstance(e, Scaled):
        return Scaled(e.coeff, e.power, flip(e.body))
    if isinstance(e, Sum):
        return Sum(tuple(flip(t) for t in e.terms))
    raise TypeError(f"{e!r} is not a tensor-level expression")

"""Commutation relations and coproducts of h6, U_a1(h6) and U_a2(h6) as expression trees.

These trees are the only place the formulas are written down; the
representation checks in :mod:`twophoton.fockrep` and the Hopf-algebra
checks in :mod:`twophoton.quantum` both read them from here. In every tree
``a`` stands for the deformation parameter (a1 or a2) of the evaluation
context.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

from .expr import Expr, Fn, Gen, One, Prod, Scaled, Sum, Tensor, Zero

N, AP, AM, BP, BM, M = (Gen(n) for n in ("N", "A+", "A-", "B+", "B-", "M"))
ONE = One()
ZERO = Zero()
GENERATORS = ("N", "A+", "A-", "B+", "B-", "M")
KINDS = ("classical", "ua1", "ua2")


def a(k: int, e: Expr, c=1) -> Expr:
    """``c * a**k * e``."""
    return Scaled(c, k, e)


def s(*terms: Expr) -> Expr:
    return Sum(tuple(terms))


def p(*factors: Expr) -> Expr:
    return Prod(tuple(factors))


def prim(x: Expr) -> Expr:
    return s(Tensor(ONE, x), Tensor(x, ONE))


# One operator in the U_a1 [A+,B-] relation and in Delta(B-) is fixed by the
# representation only up to factors of M; the tensor-product homomorphism
# check singles out N*M (plain N fails it).
NM = p(N, M)

Relation = Tuple[str, str, Expr]

_CENTRAL = [("M", g, ZERO) for g in ("N", "A+", "A-", "B+", "B-")]

RELATIONS: Dict[str, List[Relation]] = {
    "classical": [
        ("N", "A+", AP),
        ("N", "A-", -AM),
        ("A-", "A+", M),
        ("N", "B+", 2 * BP),
        ("N", "B-", -2 * BM),
        ("B-", "B+", s(4 * N, 2 * M)),
        ("A+", "B-", -2 * AM),
        ("A+", "B+", ZERO),
        ("A-", "B+", 2 * AP),
        ("A-", "B-", ZERO),
    ] + _CENTRAL,
    "ua1": [
        ("N", "A+", Fn("expm1", 1, AP)),
        ("N", "A-", -AM),
        ("A-", "A+", p(M, Fn("exp", 1, AP))),
        ("N", "B+", 2 * BP),
        ("N", "B-", s(-2 * BM, a(1, p(AM, N), -1))),
        ("B-", "B+", s(2 * p(s(ONE, Fn("exp", -1, AP)), N), 2 * M, a(1, p(AM, BP), -2))),
        ("A+", "B-", s(-p(s(ONE, Fn("exp", 1, AP)), AM), a(1, p(Fn("exp", 1, AP), NM)))),
        ("A+", "B+", ZERO),
        ("A-", "B+", 2 * Fn("expm1", -1, AP)),
        ("A-", "B-", a(1, p(AM, AM), -1)),
    ] + _CENTRAL,
    "ua2": [
        ("N", "A+", AP),
        ("N", "A-", -AM),
        ("A-", "A+", M),
        ("N", "B+", 2 * Fn("expm1", 2, BP)),
        ("N", "B-", s(-2 * BM, a(1, p(N, N), -4))),
        ("B-", "B+", s(4 * N, 2 * p(M, Fn("exp", 2, BP)))),
        ("A+", "B-", s(-2 * AM, a(1, s(p(N, AP), p(AP, N)), 2))),
        ("A+", "B+", ZERO),
        ("A-", "B+", 2 * p(Fn("exp", 2, BP), AP)),
        ("A-", "B-", a(1, s(p(N, AM), p(AM, N)), -2)),
    ] + _CENTRAL,
}

_E1 = Fn("exp", 1, AP)       # exp(a1 A+)
_E2 = Fn("exp", 2, BP)       # exp(2 a2 B+)

COPRODUCTS: Dict[str, Dict[str, Expr]] = {
    "classical": {g: prim(Gen(g)) for g in GENERATORS},
    "ua1": {
        "A+": prim(AP),
        "M": prim(M),
        "N": s(Tensor(ONE, N), Tensor(N, _E1)),
        "B+": s(Tensor(ONE, BP), Tensor(BP, Fn("exp", -2, AP))),
        "A-": s(Tensor(ONE, AM), Tensor(AM, _E1), a(1, Tensor(N, p(_E1, M)))),
        "B-": s(Tensor(ONE, BM), Tensor(BM, Fn("exp", 2, AP)),
                a(1, Tensor(AM, p(_E1, N)), -1),
                a(1, Tensor(N, p(_E1, s(AM, a(1, NM, -1)))))),
    },
    "ua2": {
        "B+": prim(BP),
        "M": prim(M),
        "N": s(Tensor(ONE, N), Tensor(N, _E2)),
        "A+": s(Tensor(ONE, AP), Tensor(AP, Fn("exp", -1, BP))),
        "A-": s(Tensor(ONE, AM), Tensor(AM, Fn("exp", 1, BP)), a(1, Tensor(N, p(_E2, AP)), 2)),
        "B-": s(Tensor(ONE, BM), Tensor(BM, _E2), a(1, Tensor(N, p(_E2, M)), 2)),
    },
}

PRIMITIVE = {"classical": GENERATORS, "ua1": ("A+", "M"), "ua2": ("B+", "M")}

# R = exp(-a X (x) N) exp(a N (x) X) with X the primitive generator
R_GENERATOR = {"ua1": "A+", "ua2": "B+"}

"""Coboundary Lie bialgebra structures on h6.

Every bialgebra structure on h6 comes from an r-matrix built on fifteen
parameters ``a1..a6, b1..b6, c1..c3``. This module builds r, evaluates
cocommutators and the Schouten bracket, evaluates the nineteen polynomial
conditions the parameters must satisfy, and constructs the parameter
families with a second primitive generator (N, A+ or B+).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .algebra import (
    BASIS, INDEX, LieElement, TensorElement, ad_tensor, basis_wedge, bracket,
    structure_constants, tensor_bracket_legs, wedge,
)
from .errors import ConstraintError
from .scalars import PARAM_NAMES, Poly, format_scalar, parse_poly, to_scalar

# (parameter, X, Y): r = sum p * X ^ Y
R_TERMS = (
    ("a1", "N", "A+"), ("a2", "N", "B+"), ("a3", "A+", "M"),
    ("a4", "B+", "M"), ("a5", "A+", "B+"), ("a6", "A+", "B-"),
    ("b1", "N", "A-"), ("b2", "N", "B-"), ("b3", "A-", "M"),
    ("b4", "B-", "M"), ("b5", "A-", "B-"), ("b6", "A-", "B+"),
    ("c1", "N", "M"), ("c2", "A+", "A-"), ("c3", "B+", "B-"),
)

EQUATIONS_A = (
    "2*a6^2 - a6*b1 + 3*a1*b5 + 2*b5*b6",
    "a2*a3 - 2*a1*a4 + 2*a4*b6 - 3*a5*c1 - a5*c2 - 2*a5*c3",
    "a1*a2 - 2*a2*b6 - 4*a5*c3",
    "a5*b1 - a1*b6 + 2*a2*c1 + 2*a2*c3 + 4*a4*c3",
    "2*a2*a6 + 4*a4*a6 - 2*a4*b1 - 2*a5*b2 + 2*a2*b3 - 4*a5*b4 + a1*c1 + a1*c2",
    "3*a1*b2 + 2*a2*b5 + 4*a6*c3 - 2*b1*c3",
    "a3*b2 + 2*a1*b4 + 2*a4*b5 + a6*c1 - a6*c2 - 2*a6*c3 - 2*b3*c3",
    "3*a2*b5 + b2*b6 + 2*a6*c3",
)
EQUATIONS_B = (
    "2*b6^2 - b6*a1 + 3*b1*a5 + 2*a5*a6",
    "b2*b3 - 2*b1*b4 + 2*b4*a6 - 3*b5*c1 + b5*c2 + 2*b5*c3",
    "b1*b2 - 2*b2*a6 + 4*b5*c3",
    "b5*a1 - b1*a6 + 2*b2*c1 - 2*b2*c3 - 4*b4*c3",
    "2*b2*b6 + 4*b4*b6 - 2*b4*a1 - 2*b5*a2 + 2*b2*a3 - 4*b5*a4 + b1*c1 - b1*c2",
    "3*b1*a2 + 2*b2*a5 - 4*b6*c3 + 2*a1*c3",
    "b3*a2 + 2*b1*a4 + 2*b4*a5 + b6*c1 + b6*c2 + 2*b6*c3 + 2*a3*c3",
    "3*b2*a5 + a2*a6 - 2*b6*c3",
)
EQUATIONS_C = (
    "a2*b2 + c3^2",
    "2*a2*b4 + 2*a4*b2 - a5*b5 + a6*b6 - 2*c3^2",
    "a1*b1 + a1*a6 + b1*b6 + 2*a5*b5 - 2*a6*b6",
)
DISCRIMINANT = "a1*b3 + a3*b1 + 2*a3*a6 + 2*b3*b6 - 2*a5*b5 + 2*a6*b6 - c2^2"

# General cocommutator, transcribed term by term: (coefficient, X, Y) for coefficient * X ^ Y.
COCOMMUTATOR_TABLE: Dict[str, Tuple[Tuple[str, str, str], ...]] = {
    "N": (
        ("a1", "N", "A+"), ("2*a2", "N", "B+"), ("a3", "A+", "M"),
        ("2*a4", "B+", "M"), ("3*a5", "A+", "B+"),
        ("-b1", "N", "A-"), ("-2*b2", "N", "B-"), ("-b3", "A-", "M"),
        ("-2*b4", "B-", "M"), ("-3*b5", "A-", "B-"),
        ("-a6", "A+", "B-"), ("b6", "A-", "B+"),
    ),
    "A+": (
        ("2*a6 + b1", "A-", "A+"), ("a2", "B+", "A+"),
        ("b2", "B-", "A+"), ("2*b2", "A-", "N"),
        ("-b1", "N", "M"), ("-2*b4", "A-", "M"), ("b5", "B-", "M"), ("b6", "B+", "M"),
        ("-c1 - c2", "A+", "M"), ("2*c3", "A-", "B+"),
    ),
    "A-": (
        ("-2*b6 - a1", "A+", "A-"), ("-b2", "B-", "A-"),
        ("-a2", "B+", "A-"), ("-2*a2", "A+", "N"),
        ("a1", "N", "M"), ("2*a4", "A+", "M"), ("-a5", "B+", "M"), ("-a6", "B-", "M"),
        ("c1 - c2", "A-", "M"), ("2*c3", "A+", "B-"),
    ),
    "B+": (
        ("4*c3", "N", "B+"), ("2*a1 - 2*b6", "A+", "B+"), ("2*b1", "A-", "B+"),
        ("2*b2", "B-", "B+"), ("4*a6 - 2*b1", "N", "A+"),
        ("4*b5", "N", "A-"), ("-2*b5", "A+", "B-"), ("-2*b5", "A-", "M"),
        ("-2*b2 - 4*b4", "N", "M"), ("-2*a6 - 2*b3", "A+", "M"), ("-2*c1 - 2*c3", "B+", "M"),
    ),
    "B-": (
        ("4*c3", "N", "B-"), ("-2*b1 + 2*a6", "A-", "B-"), ("-2*a1", "A+", "B-"),
        ("-2*a2", "B+", "B-"), ("-4*b6 + 2*a1", "N", "A-"),
        ("-4*a5", "N", "A+"), ("2*a5", "A-", "B+"), ("2*a5", "A+", "M"),
        ("2*a2 + 4*a4", "N", "M"), ("2*b6 + 2*a3", "A-", "M"), ("2*c1 - 2*c3", "B-", "M"),
    ),
    "M": (),
}


@dataclass(frozen=True)
class BialgebraParams:
    """The fifteen r-matrix coefficients, in the order a1..a6, b1..b6, c1..c3."""

    values: Tuple[object, ...]

    def __post_init__(self):
        if len(self.values) != 15:
            raise ValueError("expected 15 parameters")
        object.__setattr__(self, "values", tuple(to_scalar(v, PARAM_NAMES) for v in self.values))

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, object], variables=PARAM_NAMES) -> "BialgebraParams":
        unknown = set(mapping) - set(PARAM_NAMES)
        if unknown:
            raise KeyError(f"unknown parameter(s): {sorted(unknown)}")
        return cls(tuple(to_scalar(mapping.get(k, 0), variables) for k in PARAM_NAMES))

    @classmethod
    def zero(cls) -> "BialgebraParams":
        return cls((0,) * 15)

    @classmethod
    def symbolic(cls) -> "BialgebraParams":
        return cls(Poly.gens(PARAM_NAMES))

    def __getitem__(self, name: str):
        return self.values[PARAM_NAMES.index(name)]

    def as_dict(self) -> Dict[str, object]:
        return dict(zip(PARAM_NAMES, self.values))

    def to_json(self) -> Dict[str, str]:
        return {k: format_scalar(v) for k, v in zip(PARAM_NAMES, self.values)}

    def replace(self, **changes) -> "BialgebraParams":
        d = self.as_dict()
        d.update(changes)
        return BialgebraParams(tuple(d[k] for k in PARAM_NAMES))


def _gen(x) -> LieElement:
    return x if isinstance(x, LieElement) else LieElement.basis(x)


def build_r(p: BialgebraParams) -> TensorElement:
    r = TensorElement.zero(2)
    for name, x, y in R_TERMS:
        c = p[name]
        if c:
            r = r + c * basis_wedge(x, y)
    return r


def cocommutator(p: BialgebraParams, x) -> TensorElement:
    """``delta(x) = [1 (x) x + x (x) 1, r]``."""
    return ad_tensor(_gen(x), build_r(p))


def cocommutator_from_table(p: BialgebraParams, generator: str) -> TensorElement:
    """The transcribed general cocommutator evaluated at ``p``."""
    values = p.as_dict()
    out = TensorElement.zero(2)
    for coeff, x, y in COCOMMUTATOR_TABLE[generator]:
        c = _eval_poly(coeff, values)
        if c:
            out = out + c * basis_wedge(x, y)
    return out


def schouten(p: BialgebraParams) -> TensorElement:
    """``[[r,r]] = [r12,r13] + [r12,r23] + [r13,r23]``."""
    r = build_r(p)
    return (tensor_bracket_legs(r, r, (0, 1), (0, 2))
            + tensor_bracket_legs(r, r, (0, 1), (1, 2))
            + tensor_bracket_legs(r, r, (0, 2), (1, 2)))


def schouten_display(p: BialgebraParams) -> TensorElement:
    """The closed form ``disc(p) * A+ ^ A- ^ M`` claimed for the general r-matrix."""
    return discriminant(p) * basis_wedge("A+", "A-", "M")


_POLY_CACHE: Dict[str, Poly] = {}


def _eval_poly(text: str, values: Mapping[str, object]):
    poly = _POLY_CACHE.get(text)
    if poly is None:
        poly = _POLY_CACHE[text] = parse_poly(text, PARAM_NAMES)
    total = Fraction(0)
    for exps, c in poly.terms.items():
        term = c
        for name, e in zip(PARAM_NAMES, exps):
            if e:
                term = term * values[name] ** e
        total = total + term
    return total


def discriminant(p: BialgebraParams):
    return _eval_poly(DISCRIMINANT, p.as_dict())


@dataclass
class ClassificationReport:
    set_a: List[object]
    set_b: List[object]
    set_c: List[object]
    discriminant: object
    verdict: str
    primitive: List[str] = field(default_factory=list)

    @property
    def residuals(self) -> List[object]:
        return self.set_a + self.set_b + self.set_c

    def failed_equations(self) -> List[str]:
        names = ([f"A{i + 1}" for i in range(8)] + [f"B{i + 1}" for i in range(8)]
                 + [f"C{i + 1}" for i in range(3)])
        texts = EQUATIONS_A + EQUATIONS_B + EQUATIONS_C
        return [f"{n}: {t} = 0" for n, t, v in zip(names, texts, self.residuals) if v]

    def to_json(self) -> Dict[str, object]:
        return {
            "residuals": {
                "set_a": [format_scalar(v) for v in self.set_a],
                "set_b": [format_scalar(v) for v in self.set_b],
                "set_c": [format_scalar(v) for v in self.set_c],
            },
            "discriminant": format_scalar(self.discriminant),
            "verdict": self.verdict,
            "primitive": list(self.primitive),
            "violated": self.failed_equations(),
        }


def primitive_generators(p: BialgebraParams) -> List[str]:
    return [g for g in BASIS if cocommutator(p, g).is_zero()]


def classification_residuals(p: BialgebraParams) -> ClassificationReport:
    values = p.as_dict()
    set_a = [_eval_poly(e, values) for e in EQUATIONS_A]
    set_b = [_eval_poly(e, values) for e in EQUATIONS_B]
    set_c = [_eval_poly(e, values) for e in EQUATIONS_C]
    disc = _eval_poly(DISCRIMINANT, values)
    if any(set_a + set_b + set_c):
        verdict = "not-a-bialgebra"
    elif not disc:
        verdict = "non-standard"
    elif isinstance(disc, Poly) and not disc.is_constant():
        verdict = "generically standard"
    else:
        verdict = "standard"
    return ClassificationReport(set_a, set_b, set_c, disc, verdict, primitive_generators(p))


def mybe_invariance_residual(p: BialgebraParams) -> List[TensorElement]:
    s = schouten(p)
    return [ad_tensor(LieElement.basis(g), s) for g in BASIS]


def _coproduct_action(x: LieElement, t: TensorElement) -> TensorElement:
    # [t, 1 (x) x + x (x) 1] = -ad_x(t)
    return -ad_tensor(x, t)


def cocycle_residual(p: BialgebraParams, x, y) -> TensorElement:
    """``delta([x,y]) - [delta(x), 1(x)y + y(x)1] - [1(x)x + x(x)1, delta(y)]``."""
    x, y = _gen(x), _gen(y)
    return (ad_tensor(bracket(x, y), build_r(p))
            - _coproduct_action(y, ad_tensor(x, build_r(p)))
            - ad_tensor(x, ad_tensor(y, build_r(p))))


def dual_jacobi_residual(p: BialgebraParams) -> List[object]:
    """Jacobi identity for the bracket on the dual space induced by delta.

    With ``delta(X_k) = sum f^{ij}_k X_i (x) X_j`` the dual bracket is
    ``[xi^i, xi^j] = f^{ij}_k xi^k``; returns the nonzero Jacobi defects.
    """
    f = {g: cocommutator(p, g).coeffs for g in range(6)}

    def dual(i, j):
        return {k: f[k].get((i, j), 0) for k in range(6) if f[k].get((i, j), 0)}

    defects = []
    for i, j, l in combinations(range(6), 3):
        total: Dict[int, object] = {}
        for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
            for k, v in dual(a, b).items():
                for m, w in dual(k, c).items():
                    total[m] = total.get(m, 0) + v * w
        defects.extend(v for v in total.values() if v)
    return defects


# automorphism N -> -N, A+ <-> -A-, B+ <-> -B-, M -> -M
_AUT = {INDEX["N"]: (INDEX["N"], -1), INDEX["A+"]: (INDEX["A-"], -1),
        INDEX["A-"]: (INDEX["A+"], -1), INDEX["B+"]: (INDEX["B-"], -1),
        INDEX["B-"]: (INDEX["B+"], -1), INDEX["M"]: (INDEX["M"], -1)}


def automorphism_map(x: LieElement) -> LieElement:
    out: Dict[int, object] = {}
    for i, v in x.coeffs.items():
        j, s = _AUT[i]
        out[j] = out.get(j, 0) + s * v
    return LieElement(out)


def automorphism_tensor(t: TensorElement) -> TensorElement:
    out: Dict[Tuple[int, ...], object] = {}
    for key, v in t.coeffs.items():
        sign = 1
        new = []
        for i in key:
            j, s = _AUT[i]
            new.append(j)
            sign *= s
        out[tuple(new)] = out.get(tuple(new), 0) + sign * v
    return TensorElement(t.order, out)


def automorphism_params(p: BialgebraParams) -> BialgebraParams:
    v = p.as_dict()
    out = {}
    for i in range(1, 7):
        out[f"a{i}"] = v[f"b{i}"]
        out[f"b{i}"] = v[f"a{i}"]
    out["c1"] = v["c1"]
    out["c2"] = -v["c2"]
    out["c3"] = -v["c3"]
    return BialgebraParams(tuple(out[k] for k in PARAM_NAMES))


# families with a second primitive generator

FAMILY_KINDS = ("I-standard", "I-nonstandard", "II", "III-standard", "III-nonstandard")
FAMILY_FREE = {
    "I-standard": ("c1", "c2"),
    "I-nonstandard": ("c1",),
    "II": ("a1", "a3", "a4", "a5", "b3", "c1"),
    "III-standard": ("a2", "a3", "a4", "c2"),
    "III-nonstandard": ("a2", "a4", "a5"),
}
FAMILY_PRIMITIVE = {
    "I-standard": "N", "I-nonstandard": "N", "II": "A+",
    "III-standard": "B+", "III-nonstandard": "B+",
}


def family(kind: str, **free) -> BialgebraParams:
    """Parameters of the named subfamily from its free parameters.

    Missing free parameters default to zero. Constraints are checked, never
    solved: Type II callers must pass a tuple with ``a1*a4 + a5*c1 = 0``
    (see :func:`type_ii_params`).
    """
    if kind not in FAMILY_FREE:
        raise ValueError(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
    extra = set(free) - set(FAMILY_FREE[kind])
    if extra:
        raise ValueError(f"{kind} does not take parameter(s) {sorted(extra)}")
    f = {k: to_scalar(free.get(k, 0), PARAM_NAMES) for k in FAMILY_FREE[kind]}
    vals: Dict[str, object] = {}
    if kind == "I-standard":
        if not f["c2"]:
            raise ConstraintError("c2 != 0")
        vals = {"c1": f["c1"], "c2": f["c2"]}
    elif kind == "I-nonstandard":
        vals = {"c1": f["c1"]}
    elif kind == "II":
        if f["a1"] * f["a4"] + f["a5"] * f["c1"]:
            raise ConstraintError("a1*a4 + a5*c1 = 0")
        vals = dict(f)
        vals["c2"] = -f["c1"]
    elif kind == "III-standard":
        if not f["c2"]:
            raise ConstraintError("c2 != 0")
        vals = dict(f)
        vals["a5"] = f["a2"] * f["a3"] / f["c2"]
    elif kind == "III-nonstandard":
        vals = dict(f)
    return BialgebraParams.from_mapping(vals)


def type_ii_params(a1, a5, c1, a3=0, b3=0) -> BialgebraParams:
    """Type II parameters solving ``a1*a4 + a5*c1 = 0`` via ``a4 = -a5*c1/a1``."""
    a1, a5, c1 = (to_scalar(v, PARAM_NAMES) for v in (a1, a5, c1))
    if not a1:
        raise ConstraintError("a1 != 0", "a4 is undetermined when a1 = 0")
    return family("II", a1=a1, a3=a3, a4=-a5 * c1 / a1, a5=a5, b3=b3, c1=c1)


def family_verdict(kind: str, p: BialgebraParams) -> str:
    """Expected classification verdict for a member of ``kind``."""
    if kind in ("I-nonstandard", "III-nonstandard"):
        return "non-standard"
    if kind == "II":
        return "non-standard" if not discriminant(p) else "standard"
    return "standard"

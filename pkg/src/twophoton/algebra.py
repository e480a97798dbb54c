"""The two-photon Lie algebra h6 and tensor powers of it.

Basis order is fixed as ``(N, A+, A-, B+, B-, M)`` and indexed 0..5.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterable, Mapping, Tuple

from .scalars import format_scalar, to_scalar

BASIS = ("N", "A+", "A-", "B+", "B-", "M")
N, AP, AM, BP, BM, M = range(6)
INDEX = {name: i for i, name in enumerate(BASIS)}

# [X_i, X_j] for i < j, as {k: coefficient}; the only table of structure constants.
_BRACKETS: Dict[Tuple[int, int], Dict[int, int]] = {
    (N, AP): {AP: 1},
    (N, AM): {AM: -1},
    (N, BP): {BP: 2},
    (N, BM): {BM: -2},
    (AP, AM): {M: -1},          # [A-, A+] = M
    (AP, BP): {},
    (AP, BM): {AM: -2},
    (AM, BP): {AP: 2},
    (AM, BM): {},
    (BP, BM): {N: -4, M: -2},   # [B-, B+] = 4N + 2M
}
for _i in range(5):
    _BRACKETS[(_i, M)] = {}


def structure_constants(i: int, j: int) -> Dict[int, int]:
    """``[X_i, X_j]`` as a dict from basis index to integer coefficient."""
    if i == j:
        return {}
    if i > j:
        return {k: -c for k, c in _BRACKETS[(j, i)].items()}
    return _BRACKETS[(i, j)]


def _index(x) -> int:
    if isinstance(x, int):
        return x
    return INDEX[x]


def _clean(coeffs):
    return {k: v for k, v in coeffs.items() if v}


class LieElement:
    """Element of h6 stored as a sparse map basis index -> scalar."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping = ()):
        self.coeffs = _clean({_index(k): to_scalar(v) for k, v in dict(coeffs).items()})

    @classmethod
    def basis(cls, name) -> "LieElement":
        return cls({_index(name): 1})

    def __add__(self, other: "LieElement") -> "LieElement":
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return LieElement(out)

    def __neg__(self):
        return LieElement({k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, s):
        s = to_scalar(s)
        return LieElement({k: s * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, LieElement):
            return self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        return f"LieElement({self.to_text()})"

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(f"({format_scalar(self.coeffs[k])})*{BASIS[k]}"
                          for k in sorted(self.coeffs))

    def to_json(self) -> Dict[str, str]:
        return {BASIS[k]: format_scalar(self.coeffs[k]) for k in sorted(self.coeffs)}


def bracket(x: LieElement, y: LieElement) -> LieElement:
    out: Dict[int, object] = {}
    for i, xi in x.coeffs.items():
        for j, yj in y.coeffs.items():
            if i == j:
                continue
            for k, c in structure_constants(i, j).items():
                out[k] = out.get(k, 0) + c * xi * yj
    return LieElement(out)


def jacobi_residual():
    """``[[X,Y],Z] + [[Y,Z],X] + [[Z,X],Y]`` for all 20 triples of distinct basis elements."""
    out = []
    for i, j, k in combinations(range(6), 3):
        x, y, z = (LieElement.basis(t) for t in (i, j, k))
        res = bracket(bracket(x, y), z) + bracket(bracket(y, z), x) + bracket(bracket(z, x), y)
        out.append(((BASIS[i], BASIS[j], BASIS[k]), res))
    return out


class TensorElement:
    """Element of the 2nd or 3rd tensor power of h6 (sparse)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping = ()):
        if order not in (2, 3):
            raise ValueError("tensor order must be 2 or 3")
        self.order = order
        clean = {}
        for key, v in dict(coeffs).items():
            key = tuple(_index(t) for t in key)
            if len(key) != order:
                raise ValueError(f"index {key} does not have length {order}")
            clean[key] = to_scalar(v)
        self.coeffs = _clean(clean)

    @classmethod
    def zero(cls, order: int) -> "TensorElement":
        return cls(order)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        if other.order != self.order:
            raise ValueError("cannot add tensors of different order")
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TensorElement(self.order, out)

    def __neg__(self):
        return TensorElement(self.order, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, s):
        s = to_scalar(s)
        return TensorElement(self.order, {k: s * v for k, v in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, TensorElement):
            return self.order == other.order and self.coeffs == other.coeffs
        if other == 0:
            return not self.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def permuted(self, perm: Tuple[int, ...]) -> "TensorElement":
        """Move leg ``i`` to position ``perm[i]``."""
        out = {}
        for key, v in self.coeffs.items():
            new = [0] * self.order
            for src, dst in enumerate(perm):
                new[dst] = key[src]
            out[tuple(new)] = v
        return TensorElement(self.order, out)

    def is_antisymmetric(self) -> bool:
        for perm in permutations(range(self.order)):
            if _sign(perm) == -1 and self.permuted(perm) != -self:
                return False
        return True

    def map_scalars(self, f) -> "TensorElement":
        return TensorElement(self.order, {k: f(v) for k, v in self.coeffs.items()})

    def wedge_components(self) -> Dict[Tuple[int, ...], object]:
        """Coefficients on ``X_i ^ X_j (^ X_k)`` with increasing indices.

        Only meaningful for alternating tensors, where the coefficient on the
        wedge monomial equals the coefficient of the sorted tensor index.
        """
        return {k: v for k, v in self.coeffs.items() if list(k) == sorted(set(k)) and len(set(k)) == len(k)}

    def to_text(self) -> str:
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"({format_scalar(self.coeffs[k])})*" + "(x)".join(BASIS[i] for i in k)
            for k in sorted(self.coeffs))

    def to_json(self) -> Dict[str, str]:
        return {"⊗".join(BASIS[i] for i in k): format_scalar(self.coeffs[k])
                for k in sorted(self.coeffs)}

    def __repr__(self):
        return f"TensorElement({self.order}, {self.to_text()})"


def _sign(perm) -> int:
    sign = 1
    perm = list(perm)
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def tensor(*xs: LieElement) -> TensorElement:
    out: Dict[Tuple[int, ...], object] = {}

    def rec(pos, key, coeff):
        if pos == len(xs):
            out[key] = out.get(key, 0) + coeff
            return
        for i, c in xs[pos].coeffs.items():
            rec(pos + 1, key + (i,), coeff * c)

    rec(0, (), Fraction(1))
    return TensorElement(len(xs), out)


def wedge(x: LieElement, y: LieElement) -> TensorElement:
    """``x ^ y = x (x) y - y (x) x`` (no 1/2 factor)."""
    return tensor(x, y) - tensor(y, x)


def wedge3(x: LieElement, y: LieElement, z: LieElement) -> TensorElement:
    """Alternating sum over the six orderings of ``x (x) y (x) z``."""
    xs = (x, y, z)
    total = TensorElement.zero(3)
    for perm in permutations(range(3)):
        t = tensor(*(xs[p] for p in perm))
        total = total + t if _sign(perm) > 0 else total - t
    return total


def basis_wedge(*names: str) -> TensorElement:
    elems = [LieElement.basis(n) for n in names]
    if len(elems) == 2:
        return wedge(*elems)
    return wedge3(*elems)


def ad_tensor(x: LieElement, t: TensorElement) -> TensorElement:
    """Action of ``x`` on every leg of ``t`` (Leibniz rule), preserving the order."""
    out: Dict[Tuple[int, ...], object] = {}
    for key, v in t.coeffs.items():
        for leg, idx in enumerate(key):
            for i, xi in x.coeffs.items():
                if i == idx:
                    continue
                for k, c in structure_constants(i, idx).items():
                    new = key[:leg] + (k,) + key[leg + 1:]
                    out[new] = out.get(new, 0) + c * xi * v
    return TensorElement(t.order, out)


def tensor_bracket_legs(a: TensorElement, b: TensorElement, legs_a, legs_b, order: int = 3) -> TensorElement:
    """Commutator of two order-2 tensors embedded into an order-3 tensor power.

    ``legs_a`` / ``legs_b`` give the positions (in the triple product) of the
    two legs of ``a`` and ``b``; positions not covered carry the identity.
    Only legs shared by both embeddings produce brackets, which is all that is
    needed for the Schouten bracket.
    """
    out: Dict[Tuple[int, ...], object] = {}
    shared = set(legs_a) & set(legs_b)
    if len(shared) != 1:
        raise ValueError("embedded r-matrices must share exactly one leg")
    (s,) = shared
    for ka, va in a.coeffs.items():
        for kb, vb in b.coeffs.items():
            slot = [None] * order
            for pos, idx in zip(legs_a, ka):
                slot[pos] = idx
            for pos, idx in zip(legs_b, kb):
                if pos != s:
                    slot[pos] = idx
            ia = ka[legs_a.index(s)]
            ib = kb[legs_b.index(s)]
            if ia == ib:
                continue
            for k, c in structure_constants(ia, ib).items():
                slot[s] = k
                key = tuple(slot)
                out[key] = out.get(key, 0) + c * va * vb
    return TensorElement(order, out)

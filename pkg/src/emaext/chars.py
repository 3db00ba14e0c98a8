"""Weight multiplicities, dimensions, tensor products and Hom dimensions.

Irreducible modules of a reductive algebra ``semisimple + abelian`` are
labelled by a dominant weight together with a vector of rational charges
(the linear form by which the abelian part acts).
"""

from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

from .rootsys import (CartanData, Weight, dominant_reduce, dual_weight,
                      is_dominant, weyl_orbit)


class NotDominant(ValueError):
    pass


class RankMismatch(ValueError):
    pass


Charges = tuple[Fraction, ...]


def as_charges(values: Iterable) -> Charges:
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True, order=True)
class IrrepLabel:
    highest_weight: Weight
    charges: Charges = ()

    def __post_init__(self):
        object.__setattr__(self, "highest_weight", tuple(int(x) for x in self.highest_weight))
        object.__setattr__(self, "charges", as_charges(self.charges))
        if not is_dominant(self.highest_weight):
            raise NotDominant(f"{self.highest_weight} is not dominant")

    @property
    def is_trivial(self) -> bool:
        return not any(self.highest_weight) and not any(self.charges)

    def __str__(self) -> str:
        w = ",".join(map(str, self.highest_weight))
        if not self.charges:
            return f"({w})"
        return f"({w}; {','.join(map(str, self.charges))})"


@dataclass(frozen=True)
class WeightMultiset:
    entries: Mapping[Weight, int]

    def __post_init__(self):
        clean = {tuple(k): int(v) for k, v in self.entries.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("negative weight multiplicity")
        object.__setattr__(self, "entries", clean)

    @property
    def dim(self) -> int:
        return sum(self.entries.values())

    def weights(self) -> list[Weight]:
        return list(self.entries)

    def __iter__(self):
        return iter(self.entries.items())

    def __add__(self, other: "WeightMultiset") -> "WeightMultiset":
        c = Counter(self.entries)
        c.update(other.entries)
        return WeightMultiset(dict(c))


@dataclass(frozen=True)
class ModuleExpr:
    """Formal sum of irreducibles with positive multiplicities."""
    terms: Mapping[IrrepLabel, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {k: int(v) for k, v in self.terms.items() if v}
        if any(v < 0 for v in clean.values()):
            raise ValueError("negative multiplicity in module expression")
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    def __add__(self, other: "ModuleExpr") -> "ModuleExpr":
        c = Counter(self.terms)
        c.update(other.terms)
        return ModuleExpr(dict(c))

    def __iter__(self):
        return iter(self.terms.items())

    def multiplicity(self, label: IrrepLabel) -> int:
        return self.terms.get(label, 0)

    def __eq__(self, other):
        return isinstance(other, ModuleExpr) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{m}*{lab}" if m > 1 else str(lab) for lab, m in self.terms.items())

    @classmethod
    def of(cls, *labels: IrrepLabel) -> "ModuleExpr":
        return cls(dict(Counter(labels)))


# ---------------------------------------------------------------------------
# Freudenthal

_CACHE_LOCK = threading.Lock()
_DOMINANT_MULTS: dict[tuple, dict[Weight, int]] = {}


def _check_dominant(lam: Sequence[int], cd: CartanData) -> Weight:
    lam = tuple(lam)
    if len(lam) != cd.rank:
        raise RankMismatch(f"weight {lam} for rank {cd.rank}")
    if not is_dominant(lam):
        raise NotDominant(f"{lam} is not dominant")
    return lam


def _dominant_weights_below(cd: CartanData, lam: Weight) -> list[Weight]:
    """Dominant weights of V(lam), ordered by depth below lam.

    Dominant weights under lam are connected by subtracting positive roots
    through dominant weights only, so a search from lam finds them all.
    """
    roots = [cd.root_to_weight(rt) for rt in cd.positive_roots]
    seen = {lam}
    order = [lam]
    frontier = [lam]
    while frontier:
        nxt = []
        for mu in frontier:
            for a in roots:
                nu = tuple(x - y for x, y in zip(mu, a))
                if nu not in seen and is_dominant(nu):
                    seen.add(nu)
                    nxt.append(nu)
        order.extend(nxt)
        frontier = nxt

    def depth(mu):
        return sum(cd.weight_to_root(tuple(x - y for x, y in zip(lam, mu))))

    order.sort(key=depth)
    return order


def _dominant_multiplicities(cd: CartanData, lam: Weight) -> dict[Weight, int]:
    key = (cd.spec, lam)
    with _CACHE_LOCK:
        hit = _DOMINANT_MULTS.get(key)
    if hit is not None:
        return hit

    rho = cd.rho
    lr = tuple(x + y for x, y in zip(lam, rho))
    norm_lr = cd.form_weight_weight(lr, lr)
    pos = [(rt, cd.root_to_weight(rt), cd.form_root_root(rt, rt)) for rt in cd.positive_roots]
    mult: dict[Weight, int] = {lam: 1}
    for mu in _dominant_weights_below(cd, lam)[1:]:
        mr = tuple(x + y for x, y in zip(mu, rho))
        denom = norm_lr - cd.form_weight_weight(mr, mr)
        total = Fraction(0)
        for rt, a, aa in pos:
            k = 1
            base = cd.form_weight_root(mu, rt)
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, a))
                dom = dominant_reduce(cd, nu)[0]
                m = mult.get(dom, 0)
                if m == 0 and not _below(cd, dom, lam):
                    break
                if m:
                    total += m * (base + k * aa)
                k += 1
        value = 2 * total / denom
        if value.denominator != 1 or value < 0:
            raise AssertionError(f"Freudenthal produced {value} at {mu}")
        if value:
            mult[mu] = int(value)
    with _CACHE_LOCK:
        _DOMINANT_MULTS[key] = mult
    return mult


def _below(cd: CartanData, mu: Weight, lam: Weight) -> bool:
    diff = cd.weight_to_root(tuple(x - y for x, y in zip(lam, mu)))
    return all(c >= 0 and c.denominator == 1 for c in diff)


def weight_multiplicities(cd: CartanData, lam: Sequence[int]) -> WeightMultiset:
    lam = _check_dominant(lam, cd)
    out: dict[Weight, int] = {}
    for mu, m in _dominant_multiplicities(cd, lam).items():
        for w in weyl_orbit(cd, mu):
            out[w] = m
    return WeightMultiset(out)


def dim(cd: CartanData, lam: Sequence[int]) -> int:
    """Weyl dimension formula."""
    lam = _check_dominant(lam, cd)
    rho = cd.rho
    lr = tuple(x + y for x, y in zip(lam, rho))
    num = Fraction(1)
    for rt in cd.positive_roots:
        # the coroot normalisation cancels in the ratio
        num *= cd.form_weight_root(lr, rt) / cd.form_weight_root(rho, rt)
    assert num.denominator == 1
    return int(num)


# ---------------------------------------------------------------------------
# tensor products

def _klimyk(cd: CartanData, lam: Weight, weights: Iterable[tuple[Weight, int]]) -> Counter:
    """Brauer-Klimyk: V(lam) (x) U from the character of U."""
    rho = cd.rho
    acc: Counter = Counter()
    for xi, m in weights:
        shifted = tuple(a + b + c for a, b, c in zip(lam, xi, rho))
        dom, sign, singular = dominant_reduce(cd, shifted)
        if singular:
            continue
        acc[tuple(x - 1 for x in dom)] += sign * m
    out = Counter({k: v for k, v in acc.items() if v})
    if any(v < 0 for v in out.values()):
        raise AssertionError(f"negative multiplicity in tensor product: {dict(out)}")
    return out


def tensor_decompose(cd: CartanData, lam: Sequence[int], mu: Sequence[int]) -> ModuleExpr:
    lam = _check_dominant(lam, cd)
    mu = _check_dominant(mu, cd)
    if dim(cd, lam) < dim(cd, mu):
        lam, mu = mu, lam
    counts = _klimyk(cd, lam, weight_multiplicities(cd, mu))
    return ModuleExpr({IrrepLabel(w): m for w, m in counts.items()})


def tensor_with_module(cd: CartanData, lam: Sequence[int], module: WeightMultiset) -> Counter:
    """Highest-weight multiplicities of V(lam) (x) U for a module U given by its character."""
    return _klimyk(cd, _check_dominant(lam, cd), module)


def strip_decompose(cd: CartanData, character: Mapping[Weight, int]) -> Counter:
    """Decompose a W-invariant character by repeatedly removing a top dominant term.

    Slow and independent of the Klimyk sign bookkeeping; used to cross-check.
    """
    rest = Counter({k: v for k, v in character.items() if v})
    out: Counter = Counter()
    while rest:
        top = max(rest, key=lambda w: (sum(cd.weight_to_root(w)), w))
        if not is_dominant(top):
            raise AssertionError(f"top weight {top} of a character is not dominant")
        m = rest[top]
        if m < 0:
            raise AssertionError("character is not a nonnegative combination of irreducibles")
        out[top] += m
        for w, k in weight_multiplicities(cd, top):
            rest[w] -= m * k
            if rest[w] == 0:
                del rest[w]
    return out


def character_product(a: WeightMultiset, b: WeightMultiset) -> Counter:
    out: Counter = Counter()
    for wa, ma in a:
        for wb, mb in b:
            out[tuple(x + y for x, y in zip(wa, wb))] += ma * mb
    return out


# ---------------------------------------------------------------------------
# labels with charges

def dual_label(cd: CartanData, v: IrrepLabel) -> IrrepLabel:
    return IrrepLabel(dual_weight(cd, v.highest_weight), tuple(-c for c in v.charges))


def adjoint_expr(cd: CartanData, ab_rank: int = 0) -> ModuleExpr:
    """The adjoint module of the semisimple part (charges zero)."""
    zero = (Fraction(0),) * ab_rank
    return ModuleExpr.of(*(IrrepLabel(theta, zero) for theta in cd.highest_roots))


def label_dim(cd: CartanData, v: IrrepLabel) -> int:
    return dim(cd, v.highest_weight)


def expr_dim(cd: CartanData, u: ModuleExpr) -> int:
    return sum(m * label_dim(cd, lab) for lab, m in u)


def hom_dim(cd: CartanData, U: Union[ModuleExpr, WeightMultiset], V: IrrepLabel, W: IrrepLabel) -> int:
    """dim Hom(U (x) V, W), i.e. the multiplicity of W in U (x) V.

    Charges must add exactly: a summand of U with charge c contributes only
    when ``c + charge(V) == charge(W)``.  A bare :class:`WeightMultiset`
    carries no charges.
    """
    if len(V.charges) != len(W.charges):
        raise RankMismatch("charge vectors of different length")
    _check_dominant(V.highest_weight, cd)
    _check_dominant(W.highest_weight, cd)
    if isinstance(U, WeightMultiset):
        if any(V.charges) or any(W.charges):
            if V.charges != W.charges:
                return 0
        return tensor_with_module(cd, V.highest_weight, U).get(W.highest_weight, 0)
    total = 0
    for u, m in U:
        if len(u.charges) != len(V.charges):
            raise RankMismatch("charge vectors of different length")
        if any(a + b != c for a, b, c in zip(u.charges, V.charges, W.charges)):
            continue
        total += m * _tensor_mult(cd, u.highest_weight, V.highest_weight, W.highest_weight)
    return total


_TENSOR_CACHE: dict[tuple, Counter] = {}


def _tensor_mult(cd: CartanData, a: Weight, b: Weight, c: Weight) -> int:
    key = (cd.spec, min(a, b), max(a, b))
    hit = _TENSOR_CACHE.get(key)
    if hit is None:
        lam, mu = (a, b) if dim(cd, a) >= dim(cd, b) else (b, a)
        hit = _klimyk(cd, lam, weight_multiplicities(cd, mu))
        _TENSOR_CACHE[key] = hit
    return hit.get(c, 0)

"""Block decomposition: spectral characters and their normal forms.

Two irreducibles lie in the same block exactly when their spectral
characters agree.  At a single point the block of an evaluation module is a
class in a finitely generated abelian group (a weight lattice modulo a
sublattice), plus a rational charge modulo Z at Onsager fixed points with
abelian g0.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .chars import IrrepLabel, WeightMultiset, tensor_with_module, weight_multiplicities
from .emalg import (AlgebraConfig, Diagnostic, EvalRepSpec, Family, PointSpec,
                    ValidationError, check, g_fixed_at)
from .intlinalg import QuotientGroup, lattice_contains, quotient_of
from .rootsys import CartanData, RootSystemSpec, Weight, build, is_dominant, root_lattice, span_of_weights


class NonFiniteBlocks(ValueError):
    pass


class NotFaithful(ValueError):
    pass


def _group_name(factors: Sequence[int]) -> str:
    nontriv = [f for f in factors if f != 1]
    if not nontriv:
        return "trivial"
    return "x".join("Z" if f == 0 else f"Z/{f}" for f in nontriv)


@dataclass(frozen=True)
class BlockClass:
    """kind is "coset", "onsager" or "zero".

    ``factors``/``coset`` list only the nontrivial cyclic factors of the
    quotient group.  ``charge`` is the reduced charge in [0, 1) for
    "onsager" classes; ``charges`` holds exact abelian charges when g has an
    abelian part (these are not reduced).
    """
    kind: str
    factors: tuple[int, ...] = ()
    coset: tuple[int, ...] = ()
    charge: Fraction = Fraction(0)
    charges: tuple[Fraction, ...] = ()

    @property
    def is_identity(self) -> bool:
        return self.kind == "zero" or (not any(self.coset) and not self.charge and not any(self.charges))

    def normal_form(self) -> str:
        if self.kind == "zero":
            return "0"
        s = f"{_group_name(self.factors)}[{','.join(map(str, self.coset))}]"
        if self.kind == "onsager":
            s += f"+{self.charge}"
        if self.charges:
            s += "@" + ",".join(map(str, self.charges))
        return s

    def __str__(self):
        return self.normal_form()


ZERO = BlockClass("zero")


@dataclass(frozen=True)
class SpectralCharacter:
    values: tuple[tuple[str, BlockClass], ...]
    noneval_tag: str = ""

    def as_dict(self) -> dict[str, BlockClass]:
        return dict(self.values)

    def __str__(self):
        body = ", ".join(f"{p}: {c}" for p, c in self.values) or "empty"
        return body + (f" | noneval {self.noneval_tag!r}" if self.noneval_tag else "")


def _coset_class(q: QuotientGroup, w: Sequence[int], charges=()) -> BlockClass:
    coords = q.coset(w)
    keep = [i for i, f in enumerate(q.invariant_factors) if f != 1]
    return BlockClass("coset", tuple(q.invariant_factors[i] for i in keep),
                      tuple(coords[i] for i in keep), Fraction(0), tuple(charges))


def _root_quotient(spec: RootSystemSpec) -> QuotientGroup:
    return quotient_of(root_lattice(build(spec)))


def point_quotient(config: AlgebraConfig, x: PointSpec) -> tuple[QuotientGroup, bool]:
    """Lattice quotient classifying blocks at x, and whether a k/Z charge factor is present."""
    gx = g_fixed_at(config, x)
    if config.family is Family.ONSAGER and x.fixed_point:
        pair = config.pair
        cd = gx.cd
        if pair.g0_ab_dim:
            return quotient_of(root_lattice(cd)), True
        wts = weight_multiplicities(cd, pair.nu).weights()
        return quotient_of(span_of_weights(cd, wts)), False
    return _root_quotient(gx.spec), False


def block_class(config: AlgebraConfig, x: PointSpec, V: IrrepLabel) -> BlockClass:
    gx = g_fixed_at(config, x)
    if len(V.highest_weight) != gx.spec.rank or len(V.charges) != gx.ab_rank:
        raise ValidationError([Diagnostic("label", f"label {V} does not fit g^x at {x.id}")])
    if V.is_trivial:
        return ZERO
    q, with_charge = point_quotient(config, x)
    if not with_charge:
        return _coset_class(q, V.highest_weight, V.charges)
    # (lam, a) ~ (lam + n nu, a + n): shift so the charge lands in [0, 1)
    a = V.charges[0]
    n = -math.floor(a)
    lam = tuple(l + n * v for l, v in zip(V.highest_weight, config.pair.nu))
    c = _coset_class(q, lam)
    return BlockClass("onsager", c.factors, c.coset, a + n)


def spectral_character(config: AlgebraConfig, psi: EvalRepSpec) -> SpectralCharacter:
    vals = []
    for pid, lab in psi.support.items():
        c = block_class(config, config.point(pid), lab)
        if not c.is_identity:
            vals.append((pid, c))
    return SpectralCharacter(tuple(sorted(vals)), psi.noneval_tag)


def same_block(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec) -> bool:
    check(config, {"first": psi, "second": psi2})
    return spectral_character(config, psi) == spectral_character(config, psi2)


def enumerate_blocks(config: AlgebraConfig, support: Sequence[PointSpec]) -> list[SpectralCharacter]:
    """All spectral characters supported on the given points."""
    per_point = []
    for x in support:
        q, with_charge = point_quotient(config, x)
        if with_charge:
            raise NonFiniteBlocks(f"nonfinite block set: point {x.id} carries a k/Z charge factor")
        if config.g_ab_dim:
            raise NonFiniteBlocks(f"nonfinite block set: abelian charges at {x.id} range over k")
        if not q.is_finite:
            raise NonFiniteBlocks(f"nonfinite block set: point {x.id} has a free Z factor")
        keep = [i for i, f in enumerate(q.invariant_factors) if f != 1]
        factors = tuple(q.invariant_factors[i] for i in keep)
        classes = [BlockClass("coset", factors, tuple(e[i] for i in keep)) for e in q.elements()]
        per_point.append([(x.id, c) for c in classes])
    out = []
    for combo in product(*per_point):
        out.append(SpectralCharacter(tuple(sorted((p, c) for p, c in combo if not c.is_identity))))
    return out


# ---------------------------------------------------------------------------
# weight equivalence generated by tensoring with a fixed module

def weight_equivalence_quotient(cd: CartanData, U: WeightMultiset) -> QuotientGroup:
    """P modulo the span of the weights of U; U must be faithful, so the span contains Q."""
    span = span_of_weights(cd, U.weights())
    if not all(lattice_contains(span, a) for a in cd.simple_roots):
        raise NotFaithful("span of the weights does not contain the root lattice")
    return quotient_of(span)


_COMPONENTS: dict[tuple, dict[Weight, int]] = {}


def _components(cd: CartanData, U: WeightMultiset, bound: int) -> dict[Weight, int]:
    key = (cd.spec, frozenset(U.entries.items()), bound)
    comp = _COMPONENTS.get(key)
    if comp is not None:
        return comp
    nodes = list(product(range(bound + 1), repeat=cd.rank))
    adj: dict[Weight, set] = {v: set() for v in nodes}
    for v in nodes:
        for w in tensor_with_module(cd, v, U):
            if w in adj and w != v:
                adj[v].add(w)
                adj[w].add(v)
    comp = {}
    label = 0
    for v in nodes:
        if v in comp:
            continue
        comp[v] = label
        queue = deque([v])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if w not in comp:
                    comp[w] = label
                    queue.append(w)
        label += 1
    _COMPONENTS[key] = comp
    return comp


def chain_reachable(cd: CartanData, U: WeightMultiset, lam: Sequence[int], mu: Sequence[int],
                    box_bound: Optional[int] = None) -> bool:
    """Is there a chain lam = l0, l1, ..., ln = mu of dominant weights in the box
    [0, box_bound]^rank with V(l_{i+1}) in U (x) V(l_i) or the reverse at each step?"""
    lam, mu = tuple(lam), tuple(mu)
    if not (is_dominant(lam) and is_dominant(mu)):
        raise ValueError("weights must be dominant")
    if box_bound is None:
        box_bound = 10 * (1 + max(lam + mu, default=0))
    if max(lam + mu, default=0) > box_bound:
        raise ValueError("weights lie outside the box")
    if lam == mu:
        return True
    comp = _components(cd, U, box_bound)
    return comp[lam] == comp[mu]

"""Ext^1 between irreducible finite-dimensional representations.

Everything reduces to Hom dimensions over the fixed-point subalgebra g^x of
a single point, with the multi-point bookkeeping done in :func:`ext_dim`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .chars import IrrepLabel, ModuleExpr, adjoint_expr, hom_dim
from .emalg import (AlgebraConfig, Diagnostic, EvalRepSpec, ExtResult, Family, PointSpec,
                    SymbolicSummand, ValidationError, check, g1_module, g_fixed_at,
                    mab_dim)
from .rootsys import CartanData


def _trivial(n_charges: int, rank: int) -> IrrepLabel:
    return IrrepLabel((0,) * rank, (0,) * n_charges)


def single_point_ext(config: AlgebraConfig, x: PointSpec, V: IrrepLabel, W: IrrepLabel) -> ExtResult:
    """Ext^1 between evaluation modules at the same point x (labels for g^x)."""
    gx = g_fixed_at(config, x)
    for lab in (V, W):
        if len(lab.highest_weight) != gx.spec.rank or len(lab.charges) != gx.ab_rank:
            raise ValidationError([Diagnostic("label", f"label {lab} does not fit g^x = {gx.spec} "
                                                       f"(+{gx.ab_rank} abelian) at {x.id}")])
    cd = gx.cd
    fam = config.family
    if fam in (Family.UNTWISTED, Family.MULTILOOP):
        if gx.ab_rank:
            # the abelian part of g^x acts by scalars; the semisimple part sees charge-free labels
            if V.charges != W.charges:
                return ExtResult.single("abelian charges differ", 0)
            V, W = IrrepLabel(V.highest_weight), IrrepLabel(W.highest_weight)
        h = hom_dim(cd, adjoint_expr(cd), V, W)
        return ExtResult.single(f"tangent_dim {x.tangent_dim} x Hom_g(g, V* (x) V')", x.tangent_dim * h)
    if fam is Family.EXCHANGE:
        h = hom_dim(cd, adjoint_expr(cd), V, W)
        where = "s" if x.fixed_point else "s+s"
        return ExtResult.single(f"tangent_dim {x.tangent_dim} x Hom_{where}({where}, V* (x) V')",
                                x.tangent_dim * h)
    # generalized Onsager
    pair = config.pair
    if not x.fixed_point:
        h = hom_dim(cd, adjoint_expr(cd), V, W)
        parts = [("Hom_g(g, V* (x) V')", h)]
        if V == W and pair.g0_ab_dim:
            parts.append(("constants from g0_ab at the fixed points", 2 * pair.g0_ab_dim))
        return ExtResult(sum(c for _, c in parts), breakdown=tuple(parts))
    g1 = g1_module(config)
    if pair.g0_ab_dim:
        if V == W:
            return ExtResult.single("V = V' with g0_ab nonzero", 2 * pair.g0_ab_dim)
        if V.charges == W.charges:
            return ExtResult.single("equal charges, V != V'", 0)
    return ExtResult.single("Hom_g0(g1, V* (x) V')", hom_dim(cd, g1, V, W))


def _orbit_map(config: AlgebraConfig, rep: EvalRepSpec) -> dict[str, tuple[str, IrrepLabel]]:
    out = {}
    for pid, lab in rep.support.items():
        p = config.point(pid)
        out[p.orbit] = (pid, lab)
    return out


def ext_dim(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec) -> ExtResult:
    check(config, {"first": psi, "second": psi2})
    if psi.noneval_tag != psi2.noneval_tag:
        return ExtResult.single("noneval mismatch", 0)
    if config.g_ab_dim:
        return _ext_with_abelian_factor(config, psi, psi2)
    return _ext_perfect_or_onsager(config, psi, psi2)


def _ext_with_abelian_factor(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec) -> ExtResult:
    """Split the algebra as (rss part) x (abelian part) and combine by Kunneth."""
    zero = (0,) * config.g_ab_dim
    pts = set(psi.support) | set(psi2.support)
    for pid in sorted(pts):
        a = psi.support[pid].charges if pid in psi.support else zero
        b = psi2.support[pid].charges if pid in psi2.support else zero
        if a != b:
            return ExtResult.single("abelian characters differ", 0)
    strip = lambda rep: EvalRepSpec({p: IrrepLabel(l.highest_weight, zero) for p, l in rep.support.items()},
                                    rep.noneval_tag, rep.name)
    s1, s2 = strip(psi), strip(psi2)
    # the semisimple part g_ss (x) A is perfect, so no abelianization correction
    inner = _ext_perfect_or_onsager(config, s1, s2, mab=0)
    if s1.support == s2.support:
        return ExtResult(inner.finite_dim, inner.infinite_summands + (SymbolicSummand("DualOfMab", 1),),
                         inner.breakdown, inner.notes + ("abelian factor contributes its full dual",))
    return inner


def _ext_perfect_or_onsager(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec,
                            mab: Optional[int] = None) -> ExtResult:
    o1, o2 = _orbit_map(config, psi), _orbit_map(config, psi2)
    for orb in set(o1) & set(o2):
        if o1[orb][0] != o2[orb][0]:
            raise ValidationError([Diagnostic("orbit", f"reps use different representatives "
                                                       f"{o1[orb][0]} and {o2[orb][0]} of one orbit")])
    differing = sorted(orb for orb in set(o1) | set(o2)
                       if orb not in o1 or orb not in o2 or o1[orb][1] != o2[orb][1])
    if len(differing) >= 2:
        return ExtResult.single(f"reps differ on {len(differing)} orbits", 0)
    if len(differing) == 1:
        orb = differing[0]
        pid = (o1.get(orb) or o2.get(orb))[0]
        x = config.point(pid)
        gx = g_fixed_at(config, x)
        triv = _trivial(gx.ab_rank, gx.spec.rank)
        V = o1[orb][1] if orb in o1 else triv
        W = o2[orb][1] if orb in o2 else triv
        r = single_point_ext(config, x, V, W)
        return ExtResult(r.finite_dim, r.infinite_summands,
                         tuple((f"{pid}: {d}", c) for d, c in r.breakdown), r.notes)

    # identical reps: sum of local self-extensions, corrected by the abelianization
    parts = []
    for orb in sorted(o1):
        pid, lab = o1[orb]
        r = single_point_ext(config, config.point(pid), lab, lab)
        parts.extend((f"{pid}: {d}", c) for d, c in r.breakdown)
    if mab is None:
        mab = mab_dim(config)
    support = len(o1)
    if mab:
        if support == 0:
            parts.append(("abelianization of the algebra", mab))
        elif support > 1:
            parts.append((f"abelianization counted once, not {support} times", -(support - 1) * mab))
    return ExtResult(sum(c for _, c in parts), breakdown=tuple(parts))


# ---------------------------------------------------------------------------
# generic building blocks

@dataclass(frozen=True)
class KunnethSide:
    ext: int
    isomorphic: bool   # U_i = V_i; then Hom(U_i, V_i) is one-dimensional


def kunneth_ext(side1: KunnethSide, side2: KunnethSide) -> ExtResult:
    """Ext^1 over L1 x L2 between U1 (x) U2 and V1 (x) V2 (irreducible, finite-dimensional)."""
    if side1.isomorphic and side2.isomorphic:
        return ExtResult(side1.ext + side2.ext, breakdown=(("first factor", side1.ext),
                                                            ("second factor", side2.ext)))
    if side1.isomorphic:
        return ExtResult.single("second factor", side2.ext)
    if side2.isomorphic:
        return ExtResult.single("first factor", side1.ext)
    return ExtResult.single("neither factor isomorphic", 0)


def abelian_ext(dim_L: Optional[int], lam, mu) -> ExtResult:
    """Ext^1 between one-dimensional modules of an abelian Lie algebra L.

    ``dim_L=None`` means L is infinite-dimensional.
    """
    if tuple(lam) != tuple(mu):
        return ExtResult.single("characters differ", 0)
    if dim_L is None:
        return ExtResult(0, (SymbolicSummand("DualOfMab", 1),))
    return ExtResult.single("dual of L", dim_L)


def graded_ext_general(cd: CartanData, q_mod_k: ModuleExpr, graded_tangent: Mapping[str, int],
                       g_omega_modules: Mapping[str, ModuleExpr], V: IrrepLabel, W: IrrepLabel) -> ExtResult:
    """Ext^1 at a point with semisimple g^x from user-supplied graded data."""
    missing = set(graded_tangent) ^ set(g_omega_modules)
    if missing:
        raise ValueError(f"missing coset data for {sorted(missing)}")
    parts = [("Hom(Q/K', V* (x) V')", hom_dim(cd, q_mod_k, V, W) if q_mod_k.terms else 0)]
    for omega in sorted(graded_tangent):
        t = graded_tangent[omega]
        h = hom_dim(cd, g_omega_modules[omega], V, W) if t else 0
        parts.append((f"coset {omega}: tangent {t} x Hom(g_omega, V* (x) V')", t * h))
    return ExtResult(sum(c for _, c in parts), breakdown=tuple(parts))

"""Turn a configuration and two representations into an explicit H^1 computation.

For evaluation modules supported at points x_1..x_s, Ext^1 over the map
algebra equals Ext^1 over M/K' where K is the joint kernel of the
evaluations.  At points with a free action that quotient is the jet algebra
g (x) A/m_x^2; the Onsager quotient is built for all points at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..chars import IrrepLabel
from ..emalg import AlgebraConfig, EvalRepSpec, Family, check, g_fixed_at
from ..rootsys import RootSystemSpec
from .builders import (BUILTIN_SYMMETRIC_PAIRS, ReductiveModel, build_exchange_quotient,
                       build_jet_algebra, build_onsager_quotient, builtin_simple,
                       evaluation_at_zero, onsager_point_module)
from .lie import FinDimLie, FinModule, direct_sum, ext1_dim, pullback, tensor_modules, trivial_module


class OracleUnsupported(ValueError):
    pass


# (g, g0, g0_ab, nu) -> built-in symmetric pair
_PAIR_KEYS = {
    ("A1", "", 1, ()): "sl2-chevalley",
    ("A2", "A1", 0, (4,)): "sl3-so3",
}


@dataclass
class OracleProblem:
    algebra: FinDimLie
    first: FinModule
    second: FinModule

    def solve(self) -> int:
        return ext1_dim(self.algebra, self.first, self.second)


def _simple_factors(spec: RootSystemSpec) -> tuple[str, ...]:
    names = tuple(f"{t}{n}" for t, n in spec.components)
    if any(n not in ("A1", "A2") for n in names):
        raise OracleUnsupported(f"the oracle only realizes A1 and A2, not {spec}")
    return names


def _support_points(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec) -> list[str]:
    return sorted(set(psi.support) | set(psi2.support))


def _tensor_all(L: FinDimLie, mods: list[FinModule]) -> FinModule:
    if not mods:
        return trivial_module(L)
    out = mods[0]
    for m in mods[1:]:
        out = tensor_modules(out, m)
    return out


def _trivial_label(config: AlgebraConfig, pid: str) -> IrrepLabel:
    gx = g_fixed_at(config, config.point(pid))
    return IrrepLabel((0,) * gx.spec.rank, (0,) * gx.ab_rank)


def build_problem(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec,
                  even_tangent: int = 0) -> OracleProblem:
    check(config, {"first": psi, "second": psi2})
    if psi.noneval_tag or psi2.noneval_tag:
        raise OracleUnsupported("non-evaluation parts have no explicit model")
    if config.g_ab_dim:
        raise OracleUnsupported("the oracle does not model an abelian part of g")
    pids = _support_points(config, psi, psi2)
    if config.family is Family.ONSAGER:
        return _onsager_problem(config, psi, psi2, pids)

    # free-action style local models, one block per point
    blocks = []
    for pid in pids:
        x = config.point(pid)
        gx = g_fixed_at(config, x)
        model = ReductiveModel(_simple_factors(gx.spec))
        if config.family is Family.EXCHANGE:
            s = builtin_simple(_simple_factors(config.s_spec)[0])
            L, ev = build_exchange_quotient(s, x.fixed_point, x.tangent_dim,
                                            even_tangent if x.fixed_point else 0)
        else:
            L = build_jet_algebra(model.algebra, x.tangent_dim)
            ev = evaluation_at_zero(L.dim, model.dim)
        blocks.append((pid, model, L, ev))
    L = None
    offsets = []
    for _, _, Lx, _ in blocks:
        offsets.append(0 if L is None else L.dim)
        L = Lx if L is None else direct_sum(L, Lx)
    if L is None:
        L = FinDimLie(0, {})

    def module(rep: EvalRepSpec) -> FinModule:
        mods = []
        for (pid, model, Lx, ev), off in zip(blocks, offsets):
            lab = rep.support.get(pid, _trivial_label(config, pid))
            if lab.is_trivial:
                continue
            V = model.irrep(lab)
            phi = [{} for _ in range(L.dim)]
            for i, img in enumerate(ev):
                phi[off + i] = img
            mods.append(pullback(V, L, phi))
        return _tensor_all(L, mods)

    return OracleProblem(L, module(psi), module(psi2))


def _onsager_problem(config, psi, psi2, pids) -> OracleProblem:
    pair = config.pair
    key = (str(config.g_spec), str(pair.g0_spec), pair.g0_ab_dim, tuple(pair.nu))
    if key not in _PAIR_KEYS:
        raise OracleUnsupported("no explicit model for this symmetric pair")
    sp = BUILTIN_SYMMETRIC_PAIRS[_PAIR_KEYS[key]]()
    ts = []
    used = {config.point(p).t for p in pids if config.point(p).t is not None}
    auto = 2
    for pid in pids:
        x = config.point(pid)
        if x.fixed_point:
            t = x.t if x.t is not None else Fraction(1)
        elif x.t is not None:
            t = x.t
        else:
            while auto in used:
                auto += 1
            t = Fraction(auto)
            used.add(t)
        ts.append(Fraction(t))
    q = build_onsager_quotient(sp, ts)

    def module(rep: EvalRepSpec) -> FinModule:
        mods = []
        for k, pid in enumerate(pids):
            lab = rep.support.get(pid)
            if lab is None or lab.is_trivial:
                continue
            mods.append(onsager_point_module(q, k, lab))
        return _tensor_all(q.algebra, mods)

    return OracleProblem(q.algebra, module(psi), module(psi2))


def oracle_ext(config: AlgebraConfig, psi: EvalRepSpec, psi2: EvalRepSpec,
               even_tangent: int = 0) -> int:
    return build_problem(config, psi, psi2, even_tangent).solve()

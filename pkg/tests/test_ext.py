from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from emaext.chars import IrrepLabel, ModuleExpr, adjoint_expr, hom_dim
from emaext.emalg import EvalRepSpec, SymbolicSummand, ValidationError, parse_document, rep_from_weights
from emaext.ext import KunnethSide, abelian_ext, ext_dim, graded_ext_general, kunneth_ext, single_point_ext
from emaext.rootsys import build


def multiloop(g="A1", n=1, points=("p1", "p2", "p3"), g_ab=0):
    body = "\n".join(f'point "{p}" {{}}' for p in points)
    return parse_document(f'algebra {{ family = multiloop; g = "{g}"; n = {n}; g_ab = {g_ab} }}\n{body}').config


def onsager(points):
    body = "\n".join(f'point "{p}" {{ {opts} }}' for p, opts in points.items())
    return parse_document(f'algebra {{ family = onsager; pair = "sl2-chevalley" }}\n{body}').config


def test_two_differing_orbits_give_zero():
    cfg = multiloop()
    r = ext_dim(cfg, rep_from_weights(cfg, {"p1": (1,)}), rep_from_weights(cfg, {"p2": (1,)}))
    assert r.finite_dim == 0 and r.breakdown == (("reps differ on 2 orbits", 0),)


def test_multiloop_n2_same_point():
    cfg = multiloop(n=2)
    r = ext_dim(cfg, rep_from_weights(cfg, {"p1": (1,)}), rep_from_weights(cfg, {"p1": (3,)}))
    assert r.finite_dim == 2


def test_trivial_rep_perfect_algebra():
    cfg = multiloop()
    triv = EvalRepSpec({})
    assert ext_dim(cfg, triv, triv).finite_dim == 0


def test_onsager_fixed_point_cases():
    cfg = onsager({"one": "fixed = true"})
    k = lambda a: EvalRepSpec({"one": IrrepLabel((), (Fraction(a),))})
    assert ext_dim(cfg, k("3/2"), k("5/2")).finite_dim == 1
    assert ext_dim(cfg, k("5/2"), k("3/2")).finite_dim == 1
    assert ext_dim(cfg, k("5/2"), k("5/2")).finite_dim == 2
    assert ext_dim(cfg, k("5/2"), k(3)).finite_dim == 0
    assert ext_dim(cfg, k(0), k(2)).finite_dim == 0


def test_onsager_free_point_self_ext():
    cfg = onsager({"x": ""})
    V = rep_from_weights(cfg, {"x": (1,)})
    r = ext_dim(cfg, V, V)
    assert r.finite_dim == 3
    assert [c for _, c in r.breakdown] == [1, 2]


def test_onsager_abelianization_correction():
    cfg = onsager({"one": "fixed = true", "x": "", "y": ""})
    psi = EvalRepSpec({"one": IrrepLabel((), (Fraction(1, 2),)), "x": IrrepLabel((1,)), "y": IrrepLabel((2,))})
    r = ext_dim(cfg, psi, psi)
    # 2 + (1 + 2) + (1 + 2) - 2 * 2
    assert r.finite_dim == 4
    assert r.breakdown[-1][1] == -4
    assert ext_dim(cfg, EvalRepSpec({}), EvalRepSpec({})).finite_dim == 2


def test_noneval_mismatch():
    cfg = multiloop()
    a = rep_from_weights(cfg, {"p1": (1,)}, noneval="A")
    b = rep_from_weights(cfg, {"p1": (1,)}, noneval="B")
    assert ext_dim(cfg, a, b).finite_dim == 0


def test_different_orbit_representatives_rejected():
    d = parse_document('algebra { family = untwisted; g = "A1" }\npoint "p" { orbit = "o" }\npoint "q" { orbit = "o" }')
    cfg = d.config
    with pytest.raises(ValidationError):
        ext_dim(cfg, rep_from_weights(cfg, {"p": (1,)}), rep_from_weights(cfg, {"q": (1,)}))


def test_abelian_part_of_g():
    cfg = multiloop(g_ab=1)
    V = rep_from_weights(cfg, {"p1": (1,)}, {"p1": (1,)})
    W = rep_from_weights(cfg, {"p1": (3,)}, {"p1": (1,)})
    W2 = rep_from_weights(cfg, {"p1": (3,)}, {"p1": (2,)})
    assert ext_dim(cfg, V, W).finite_dim == 1 and not ext_dim(cfg, V, W).infinite_summands
    assert ext_dim(cfg, V, W2).finite_dim == 0
    r = ext_dim(cfg, V, V)
    # Hom_g(g, V(1)* (x) V(1)) = 1 from the semisimple part, plus the abelian dual
    assert r.finite_dim == 1 and r.infinite_summands == (SymbolicSummand("DualOfMab", 1),)
    assert str(r) == "1 + dual(M_ab)^1"
    triv = EvalRepSpec({})
    assert str(ext_dim(cfg, triv, triv)) == "0 + dual(M_ab)^1"


def test_exchange_points():
    d = parse_document('algebra { family = exchange; s = "A1" }\n'
                       'point "f" { fixed = true; tangent_dim = 2 }\npoint "u" {}')
    cfg = d.config
    assert single_point_ext(cfg, cfg.point("f"), IrrepLabel((1,)), IrrepLabel((3,))).finite_dim == 2
    assert single_point_ext(cfg, cfg.point("f"), IrrepLabel((0,)), IrrepLabel((0,))).finite_dim == 0
    # free point: s x s labels, only one side may change
    assert single_point_ext(cfg, cfg.point("u"), IrrepLabel((1, 2)), IrrepLabel((3, 2))).finite_dim == 1
    assert single_point_ext(cfg, cfg.point("u"), IrrepLabel((1, 2)), IrrepLabel((3, 0))).finite_dim == 0


def test_kunneth_table():
    assert kunneth_ext(KunnethSide(3, False), KunnethSide(4, False)).finite_dim == 0
    assert kunneth_ext(KunnethSide(3, True), KunnethSide(4, False)).finite_dim == 4
    assert kunneth_ext(KunnethSide(3, False), KunnethSide(4, True)).finite_dim == 3
    assert kunneth_ext(KunnethSide(3, True), KunnethSide(4, True)).finite_dim == 7


def test_abelian_ext():
    assert abelian_ext(3, (1, 0), (0, 1)).finite_dim == 0
    assert abelian_ext(3, (1, 0), (1, 0)).finite_dim == 3
    r = abelian_ext(None, (1,), (1,))
    assert r.infinite_summands == (SymbolicSummand("DualOfMab", 1),)


def test_graded_ext_general():
    A1 = build("A1")
    V = IrrepLabel((1,))
    adj = adjoint_expr(A1)
    assert graded_ext_general(A1, ModuleExpr(), {"0": 1}, {"0": adj}, V, V).finite_dim == 1
    assert graded_ext_general(A1, ModuleExpr(), {"0": 0}, {"0": adj}, V, V).finite_dim == 0
    W = IrrepLabel((3,))
    assert graded_ext_general(A1, ModuleExpr.of(IrrepLabel((2,))), {}, {}, V, W).finite_dim == 1
    with pytest.raises(ValueError):
        graded_ext_general(A1, ModuleExpr(), {"0": 1}, {}, V, V)


labels = st.integers(0, 4)


@settings(max_examples=40, deadline=None)
@given(labels, labels, labels, labels)
def test_zero_locus_is_symmetric(a, b, c, d):
    cfg = multiloop()
    psi = rep_from_weights(cfg, {"p1": (a,), "p2": (b,)})
    psi2 = rep_from_weights(cfg, {"p1": (c,), "p2": (d,)})
    assert (ext_dim(cfg, psi, psi2).finite_dim == 0) == (ext_dim(cfg, psi2, psi).finite_dim == 0)


@settings(max_examples=40, deadline=None)
@given(labels, labels, st.integers(1, 4))
def test_common_points_do_not_change_one_orbit_answer(a, b, extra):
    cfg = multiloop()
    base = ext_dim(cfg, rep_from_weights(cfg, {"p1": (a,)}), rep_from_weights(cfg, {"p1": (b,)}))
    more = ext_dim(cfg, rep_from_weights(cfg, {"p1": (a,), "p3": (extra,)}),
                   rep_from_weights(cfg, {"p1": (b,), "p3": (extra,)}))
    if a != b:
        assert base.finite_dim == more.finite_dim


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["A1", "A2"]), st.integers(1, 4), st.data())
def test_linear_in_n(g, n, data):
    cd = build(g)
    w = lambda: tuple(data.draw(st.integers(0, 2)) for _ in range(cd.rank))
    a, b = w(), w()
    c1, cn = multiloop(g, 1), multiloop(g, n)
    e1 = ext_dim(c1, rep_from_weights(c1, {"p1": a}), rep_from_weights(c1, {"p1": b})).finite_dim
    en = ext_dim(cn, rep_from_weights(cn, {"p1": a}), rep_from_weights(cn, {"p1": b})).finite_dim
    assert en == n * e1
    assert e1 == hom_dim(cd, adjoint_expr(cd), IrrepLabel(a), IrrepLabel(b))

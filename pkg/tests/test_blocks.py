from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from emaext.blocks import (ZERO, NonFiniteBlocks, NotFaithful, block_class, chain_reachable,
                           enumerate_blocks, same_block, spectral_character, weight_equivalence_quotient)
from emaext.chars import IrrepLabel, WeightMultiset, weight_multiplicities
from emaext.emalg import EvalRepSpec, parse_document, rep_from_weights
from emaext.ext import ext_dim
from emaext.rootsys import build


def multiloop(g, points=("p1", "p2"), g_ab=0):
    body = "\n".join(f'point "{p}" {{}}' for p in points)
    return parse_document(f'algebra {{ family = multiloop; g = "{g}"; g_ab = {g_ab} }}\n{body}').config


SL2_ONSAGER = parse_document('algebra { family = onsager; pair = "sl2-chevalley" }\n'
                             'point "one" { fixed = true }\npoint "x" {}').config
SL3_SO3 = parse_document('algebra { family = onsager; g = "A2"; g0 = "A1"; g0_ab = 0; nu = [4] }\n'
                         'point "one" { fixed = true }').config


def test_a2_cosets():
    cfg = multiloop("A2")
    p = cfg.point("p1")
    assert block_class(cfg, p, IrrepLabel((1, 0))).normal_form() == "Z/3[1]"
    assert block_class(cfg, p, IrrepLabel((0, 1))).normal_form() == "Z/3[2]"
    assert block_class(cfg, p, IrrepLabel((1, 1))).normal_form() == "Z/3[0]"
    assert block_class(cfg, p, IrrepLabel((0, 0))) == ZERO


def test_onsager_fixed_point_charge():
    c = block_class(SL2_ONSAGER, SL2_ONSAGER.point("one"), IrrepLabel((), (Fraction(5, 2),)))
    assert c.kind == "onsager" and c.charge == Fraction(1, 2)
    assert c.normal_form() == "trivial[]+1/2"
    c = block_class(SL2_ONSAGER, SL2_ONSAGER.point("one"), IrrepLabel((), (Fraction(-3),)))
    assert c.is_identity


def test_sl3_so3_fixed_point_is_p_mod_2p():
    x = SL3_SO3.point("one")
    assert block_class(SL3_SO3, x, IrrepLabel((1,))).normal_form() == "Z/2[1]"
    assert block_class(SL3_SO3, x, IrrepLabel((2,))).is_identity
    assert len(enumerate_blocks(SL3_SO3, [x])) == 2


def test_spectral_characters():
    cfg = multiloop("A2")
    assert str(spectral_character(cfg, EvalRepSpec({}))) == "empty"
    ch = spectral_character(cfg, rep_from_weights(cfg, {"p1": (1, 0), "p2": (0, 1)}))
    assert str(ch) == "p1: Z/3[1], p2: Z/3[2]"
    # twisting by a root at one point does not move the block
    a = rep_from_weights(cfg, {"p1": (1, 0), "p2": (0, 1)})
    b = rep_from_weights(cfg, {"p1": (1, 0), "p2": (1, 2)})   # (1,2) - (0,1) = (1,1), a root
    assert same_block(cfg, a, b)


def test_same_block_a1():
    cfg = multiloop("A1")
    one, two, three = (rep_from_weights(cfg, {"p1": (k,)}) for k in (1, 2, 3))
    assert same_block(cfg, one, one)
    assert same_block(cfg, one, three)
    assert not same_block(cfg, one, two)


@pytest.mark.parametrize("g, per_point", [("A1", 2), ("A2", 3), ("G2", 1), ("D4", 4), ("E6", 3), ("B3", 2)])
def test_block_counts(g, per_point):
    cfg = multiloop(g)
    assert len(enumerate_blocks(cfg, [cfg.point("p1")])) == per_point
    chars = enumerate_blocks(cfg, [cfg.point("p1"), cfg.point("p2")])
    assert len(chars) == per_point ** 2 and len(set(chars)) == len(chars)


def test_nonfinite_cases():
    with pytest.raises(NonFiniteBlocks):
        enumerate_blocks(SL2_ONSAGER, [SL2_ONSAGER.point("one")])
    cfg = multiloop("A1", g_ab=1)
    with pytest.raises(NonFiniteBlocks):
        enumerate_blocks(cfg, [cfg.point("p1")])
    assert len(enumerate_blocks(SL2_ONSAGER, [SL2_ONSAGER.point("x")])) == 2


def test_weight_equivalence_quotient():
    A1, A2 = build("A1"), build("A2")
    assert weight_equivalence_quotient(A1, weight_multiplicities(A1, (2,))).nontrivial_factors == (2,)
    assert weight_equivalence_quotient(A1, weight_multiplicities(A1, (1,))).nontrivial_factors == ()
    assert weight_equivalence_quotient(A2, weight_multiplicities(A2, (1, 1))).nontrivial_factors == (3,)
    with pytest.raises(NotFaithful):
        weight_equivalence_quotient(A1, WeightMultiset({(0,): 1}))


def test_chain_examples():
    A1 = build("A1")
    adj = weight_multiplicities(A1, (2,))
    assert chain_reachable(A1, adj, (2,), (2,))
    assert chain_reachable(A1, adj, (1,), (3,), box_bound=10)
    assert not chain_reachable(A1, adj, (0,), (1,), box_bound=10)
    with pytest.raises(ValueError):
        chain_reachable(A1, adj, (0,), (11,), box_bound=10)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_nonzero_ext_implies_same_block(a, b, c, d):
    cfg = multiloop("A2")
    V = rep_from_weights(cfg, {"p1": (a, b)})
    W = rep_from_weights(cfg, {"p1": (c, d)})
    if ext_dim(cfg, V, W).finite_dim:
        assert same_block(cfg, V, W)


def test_onsager_normal_form_matches_shift_search():
    """Two fixed-point labels share a block iff some shift (lam + n nu, a + n) matches mod Q0."""
    cfg = SL2_ONSAGER
    charges = [Fraction(k, 4) for k in range(-8, 9)]
    for a, b in product(charges, repeat=2):
        same = same_block(cfg, EvalRepSpec({"one": IrrepLabel((), (a,))}),
                          EvalRepSpec({"one": IrrepLabel((), (b,))}))
        search = any(a + n == b for n in range(-5, 6))
        assert same == search

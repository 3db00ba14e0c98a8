from fractions import Fraction

import pytest

from emaext.chars import IrrepLabel
from emaext.emalg import (AlgebraConfig, ConfigSyntaxError, EvalRepSpec, ExtResult, Family, PointSpec,
                          ValidationError, g1_module, g_fixed_at, mab_dim, parse_document, validate)
from emaext.rootsys import RootSystemSpec

ONSAGER = """
algebra { family = onsager; pair = "sl2-chevalley" }
point "one" { fixed = true; t = 1 }
point "x" { t = 3 }
rep "k" { at "one" charge = [1/2] }
rep "V" { at "x" weight = [1] }
"""


def codes(exc):
    return {d.code for d in exc.value.diagnostics}


def test_multiloop_tangent_dim_must_match_n():
    cfg = AlgebraConfig(Family.MULTILOOP, RootSystemSpec.parse("A1"), n=2,
                        points={"p": PointSpec("p", tangent_dim=3)})
    diags = validate(cfg)
    assert [d.code for d in diags] == ["tangent_dim"]
    assert "must equal n" in diags[0].message


def test_same_orbit_rejected():
    text = """
    algebra { family = untwisted; g = "A1" }
    point "p" { orbit = "o" }
    point "q" { orbit = "o" }
    rep "bad" { at "p" weight = [1]; at "q" weight = [2] }
    """
    with pytest.raises(ValidationError) as exc:
        parse_document(text)
    assert "orbit" in codes(exc)


def test_onsager_document_ok():
    d = parse_document(ONSAGER)
    assert d.config.family is Family.ONSAGER
    assert d.rep("k").support["one"] == IrrepLabel((), (Fraction(1, 2),))
    assert d.config.point("x").t == 3
    assert mab_dim(d.config) == 2
    assert [str(l) for l, _ in g1_module(d.config)] == ["(; -1)", "(; 1)"]


@pytest.mark.parametrize("text, code", [
    ('algebra { family = untwisted; g = "A1"; color = 3 }', "unknown-key"),
    ('algebra { family = untwisted }', "g"),
    ('algebra { family = loop; g = "A1" }', "family"),
    ('algebra { family = untwisted; g = "Q7" }', "root-system"),
    ('algebra { family = onsager; pair = "sl2-chevalley" }\npoint "p" { tangent_dim = 2 }', "tangent_dim"),
    ('algebra { family = onsager; pair = "sl2-chevalley" }\npoint "p" { fixed = true; t = 2 }', "t"),
    ('algebra { family = onsager; pair = "sl2-chevalley" }\npoint "p" { t = 1 }', "t"),
    ('algebra { family = untwisted; g = "A1" }\npoint "p" { t = 2 }', "t"),
    ('algebra { family = untwisted; g = "A1" }\npoint "p" { fixed = true }', "stabilizer"),
    ('algebra { family = exchange; s = "A1xA1" }', "s"),
    ('algebra { family = onsager; g = "A2"; g0 = "A1xA1"; g0_ab = 0; nu = [1,0] }', "faithful"),
    ('algebra { family = onsager; g = "A2"; g0 = "A1"; g0_ab = 0; nu = [1,1] }', "nu"),
    ('algebra { family = untwisted; g = "A1" }\npoint "p" {}\nrep "r" { at "p" weight = [1,0] }', "weight"),
    ('algebra { family = untwisted; g = "A1" }\npoint "p" {}\nrep "r" { at "p" weight = [-1] }', "weight"),
    ('algebra { family = untwisted; g = "A1" }\npoint "p" {}\nrep "r" { at "z" weight = [1] }', "unknown-point"),
    ('algebra { family = untwisted; g = "A1" }\npoint "p" {}\npoint "p" {}', "duplicate-point"),
])
def test_validation_errors(text, code):
    with pytest.raises(ValidationError) as exc:
        parse_document(text)
    assert code in codes(exc)


@pytest.mark.parametrize("text", [
    'algebra { family = untwisted; g = "A1"',
    'algebra { family = untwisted g = "A1" }',
    'algebra { family = untwisted; g = "A1" } rep { }',
    'algebra { family = untwisted; g = "A1" }\npoint "p" {}\nrep "r" { at "p" weight = [1 2] }',
])
def test_syntax_errors(text):
    with pytest.raises(ConfigSyntaxError):
        parse_document(text)


def test_comments_newlines_and_defaults():
    d = parse_document("""
    # leading comment
    algebra {
        family = multiloop   # trailing comment
        g = "A2"
        n = 2
    }
    point "p" {}
    rep "V" { at "p" weight = [1, 0] }
    rep "T" { }
    """)
    assert d.config.point("p").tangent_dim == 2
    assert d.rep("T").support == {}
    assert d.rep("V").name == "V"


def test_g_fixed_at():
    ex = parse_document('algebra { family = exchange; s = "A2" }\npoint "f" { fixed = true }\npoint "u" {}')
    assert str(g_fixed_at(ex.config, ex.config.point("f")).spec) == "A2"
    assert str(g_fixed_at(ex.config, ex.config.point("u")).spec) == "A2xA2"
    ml = parse_document('algebra { family = multiloop; g = "G2"; g_ab = 2 }\npoint "p" {}')
    gx = g_fixed_at(ml.config, ml.config.point("p"))
    assert str(gx.spec) == "G2" and gx.ab_rank == 2
    on = parse_document(ONSAGER)
    assert g_fixed_at(on.config, on.config.point("one")).ab_rank == 1
    assert g_fixed_at(on.config, on.config.point("one")).spec.rank == 0
    assert str(g_fixed_at(on.config, on.config.point("x")).spec) == "A1"


def test_trivial_labels_drop_out_of_support():
    rep = EvalRepSpec({"b": IrrepLabel((0,)), "a": IrrepLabel((2,))})
    assert list(rep.support) == ["a"]


def test_ext_result_breakdown_must_sum():
    with pytest.raises(AssertionError):
        ExtResult(3, breakdown=(("x", 1),))
    assert str(ExtResult.single("x", 2)) == "2"

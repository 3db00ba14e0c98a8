import pytest
from hypothesis import given, settings, strategies as st

from emaext.chars import weight_multiplicities
from emaext.intlinalg import lattice_contains, quotient_of
from emaext.rootsys import (RootSystemError, RootSystemSpec, build, dominant_reduce, dual_weight,
                            is_dominant, reflect, root_lattice, span_of_weights, weyl_orbit)

POSITIVE = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "D4": 12, "D5": 20, "G2": 6,
            "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@pytest.mark.parametrize("name, count", sorted(POSITIVE.items()))
def test_positive_root_counts(name, count):
    assert len(build(name).positive_roots) == count


def test_build_examples():
    assert build("A1").cartan.tolist() == [[2]]
    assert build("A1xA1").rank == 2
    assert len(build("A1xG2").positive_roots) == 7


@pytest.mark.parametrize("bad", ["D2", "E5", "F3", "G3", "B1", "X2", "A0", "A"])
def test_invalid_specs(bad):
    with pytest.raises(RootSystemError):
        RootSystemSpec.parse(bad)


def test_dominant_reduce_examples():
    cd = build("A1")
    assert dominant_reduce(cd, (3,)) == ((3,), 1, False)
    assert dominant_reduce(cd, (-3,)) == ((3,), -1, False)
    # a wall: fixed by the simple reflection
    assert dominant_reduce(cd, (0,))[2] is True
    cd = build("A2")
    assert dominant_reduce(cd, (-1, -1)) == ((1, 1), -1, False)


def test_dual_weight_examples():
    assert dual_weight(build("A1"), (5,)) == (5,)
    assert dual_weight(build("A2"), (1, 0)) == (0, 1)
    assert dual_weight(build("D4"), (1, 0, 0, 0)) == (1, 0, 0, 0)
    assert dual_weight(build("E6"), (1, 0, 0, 0, 0, 0)) == (0, 0, 0, 0, 0, 1)
    with pytest.raises(RootSystemError):
        dual_weight(build("A2"), (-1, 0))


def test_root_lattice_examples():
    assert quotient_of(root_lattice(build("A1"))).nontrivial_factors == (2,)
    assert quotient_of(root_lattice(build("A2"))).nontrivial_factors == (3,)
    assert quotient_of(root_lattice(build("G2"))).nontrivial_factors == ()
    assert quotient_of(root_lattice(build("D4"))).nontrivial_factors == (2, 2)
    assert quotient_of(root_lattice(build("E8"))).nontrivial_factors == ()


def test_span_of_weights_examples():
    cd = build("A1")
    assert quotient_of(span_of_weights(cd, [(2,), (0,), (-2,)])).nontrivial_factors == (2,)
    assert quotient_of(span_of_weights(cd, [(1,), (-1,)])).nontrivial_factors == ()
    assert quotient_of(span_of_weights(cd, [])).invariant_factors == (0,)


@pytest.mark.parametrize("name", ["A1", "A2", "A3", "B2", "B3", "C3", "C4", "D4", "G2", "F4", "A1xB2"])
def test_adjoint_weights_span_root_lattice(name):
    cd = build(name)
    wts = [w for th in cd.highest_roots for w in weight_multiplicities(cd, th).weights()]
    span = span_of_weights(cd, wts)
    q = root_lattice(cd)
    assert all(lattice_contains(span, a) for a in cd.simple_roots)
    assert all(lattice_contains(q, w) for w in wts)


weights2 = st.tuples(st.integers(-6, 6), st.integers(-6, 6))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "B2", "G2", "A1xA1"]), weights2)
def test_dominant_reduce_properties(name, w):
    cd = build(name)
    dom, sign, singular = dominant_reduce(cd, w)
    assert is_dominant(dom)
    assert dominant_reduce(cd, dom) == (dom, 1, singular)
    assert dom in weyl_orbit(cd, w)
    assert singular == any(reflect(cd, dom, i) == dom for i in range(cd.rank))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "A3", "B3", "D4", "D5", "E6"]), st.data())
def test_dual_is_involution(name, data):
    cd = build(name)
    lam = tuple(data.draw(st.integers(0, 3)) for _ in range(cd.rank))
    assert dual_weight(cd, dual_weight(cd, lam)) == lam

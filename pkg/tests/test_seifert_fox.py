import pytest
from hypothesis import given, settings, strategies as st

from conwaypot.diagrams import from_braid, parse_pd
from conwaypot.fox import alexander_polynomial, crosscheck, crosscheck_values, wirtinger
from conwaypot.laurent import LaurentPoly, PotentialValue, equal_up_to_units, normal_form
from conwaypot.seifert import (
    SeifertSurface,
    conway_from_seifert,
    conway_of_diagram,
    conway_z_form,
    matrix_from_json,
    matrix_to_json,
    seifert_circles,
    seifert_matrix,
)

braids = st.integers(2, 4).flatmap(
    lambda s: st.lists(st.integers(1, s - 1).flatmap(
        lambda g: st.sampled_from((g, -g))), min_size=1, max_size=8))


def zform(word=None, pd=None):
    d = from_braid(word) if word is not None else parse_pd(pd)
    return conway_z_form(conway_of_diagram(d)).format(["z"])


@pytest.mark.parametrize("word,expected", [
    ([1, 1, 1], "z^2 + 1"),
    ([1, -2, 1, -2], "-z^2 + 1"),
    ([1, 1, 1, 1], "z^3 + 2*z"),
    ([1, 1, 1, 1, 1], "z^4 + 3*z^2 + 1"),
    ([1, -2, 1, -2, 1, -2], "z^4"),
    ([1, 1, 2, 2], "z^2"),
    ([1, 1, 1, 2, -3, 2, -3], "-z^4 + 1"),
])
def test_known_conway_polynomials(word, expected):
    assert zform(word) == expected


@pytest.mark.parametrize("pd,expected", [
    ("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "z^2 + 1"),
    ("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]", "-z^2 + 1"),
    ("X[1,5,2,4] X[3,9,4,8] X[5,1,6,10] X[7,3,8,2] X[9,7,10,6]", "2*z^2 + 1"),
    ("X[1,4,2,5] X[7,10,8,11] X[3,9,4,8] X[9,3,10,2] X[5,12,6,1] X[11,6,12,7]",
     "-2*z^2 + 1"),
])
def test_knot_table_codes(pd, expected):
    assert zform(pd=pd) == expected


def test_seifert_circles_and_genus():
    d = from_braid([1, 1, 1])
    assert len(seifert_circles(d)) == 2
    surf = SeifertSurface(d)
    assert len(surf.cycles) == 2
    A = surf.matrix()
    assert len(A) == 2
    # det(A - A^T) = 1 for a knot
    assert A[0][1] - A[1][0] in (1, -1)


@settings(max_examples=80, deadline=None)
@given(braids)
def test_seifert_matrix_is_integral_and_unimodular_for_knots(word):
    d = from_braid(word)
    surf = SeifertSurface(d)
    if not surf.connected:
        return
    A = surf.matrix()
    D = conway_from_seifert(A)
    if d.mu == 1:
        assert D.evaluate([1]) == 1


@settings(max_examples=80, deadline=None)
@given(braids)
def test_pipeline_agrees_with_fox_oracle(word):
    d = from_braid(word)
    pv = PotentialValue(conway_of_diagram(d), (1,))
    assert crosscheck(pv, d)["pass"]


@settings(max_examples=40, deadline=None)
@given(braids)
def test_conway_invariant_under_reversal_and_relabel(word):
    d = from_braid(word)
    D = conway_of_diagram(d)
    assert conway_of_diagram(d.reverse()) == D
    assert conway_of_diagram(parse_pd(d.to_text())) == D
    # mirroring sends z to -z, which is t -> t^-1
    assert conway_of_diagram(d.mirror()) == D.invert_all()


def test_split_diagram_has_zero_conway():
    assert conway_of_diagram(parse_pd("O[1] O[2]")).is_zero()
    assert alexander_polynomial(parse_pd("O[1] O[2]")).is_zero()


def test_matrix_json_round_trip():
    A = seifert_matrix(from_braid([1, 1, 1]))
    assert matrix_from_json(matrix_to_json(A)) == A
    with pytest.raises(ValueError):
        matrix_from_json({"size": 2, "entries": [[1, 2]]})


def test_conway_z_form_rejects_non_conway():
    assert conway_z_form(LaurentPoly.var(1, 0, -1)) is None


def test_wirtinger_shape():
    d = from_braid([1, 1, 1])
    gens, rels = wirtinger(d)
    assert len(gens) == 3 and len(rels) == 3


def test_fox_known_values():
    t = LaurentPoly.var(1, 0)
    tref = alexander_polynomial(parse_pd("braid: 1 1 1"))
    assert tref == normal_form(t * t - t + 1)
    hopf = alexander_polynomial(from_braid([1, 1], colors=[1, 2]))
    assert hopf == LaurentPoly.one(2)
    chain = alexander_polynomial(from_braid([1, 1, 2, 2], colors=[1, 2, 3]))
    assert equal_up_to_units(chain, LaurentPoly.var(3, 1) - 1)


def test_crosscheck_detects_mismatch():
    t = LaurentPoly.var(1, 0)
    delta = normal_form(t * t - t + 1)
    good = PotentialValue(t ** 2 - 1 + t ** -2, (1,))
    bad = PotentialValue(t ** 2 + 1 + t ** -2, (1,))
    assert crosscheck_values(good, delta, 1)["pass"]
    assert not crosscheck_values(bad, delta, 1)["pass"]
    # a multivariable value with a denominator is never a polynomial match
    frac = PotentialValue(LaurentPoly.one(2), (1, 0))
    assert not crosscheck_values(frac, LaurentPoly.one(2), 2)["pass"]

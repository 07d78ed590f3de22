import pytest
from hypothesis import given, settings, strategies as st

from conwaypot.diagrams import ColoredDiagram, DiagramError, from_braid, parse_pd

TREFOIL_LEFT = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"
FIG8 = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"

braids = st.integers(2, 4).flatmap(
    lambda s: st.lists(st.integers(1, s - 1).flatmap(
        lambda g: st.sampled_from((g, -g))), min_size=1, max_size=7))


def test_parse_knotatlas_codes():
    d = parse_pd(TREFOIL_LEFT)
    assert d.mu == 1 and d.n == 1
    assert d.signs == (-1, -1, -1)
    f = parse_pd(FIG8)
    assert sorted(f.signs) == [-1, -1, 1, 1]


def test_parse_headers_and_comments():
    d = parse_pd("# hopf\ncolors: 1,2\nX[4,1,3,2] X[2,3,1,4]\n")
    assert d.n == 2 and d.mu == 2
    assert d.linking_number(0, 1) == -1
    b = parse_pd("braid: 1 1 1")
    assert b.signs == (1, 1, 1)
    assert parse_pd("O[1] O[2]").mu == 2


def test_parse_rejects_bad_input():
    with pytest.raises(DiagramError):
        parse_pd("X[1,2,3]")
    with pytest.raises(DiagramError):
        parse_pd("X[1,1,2,2] X[3,4,5,6]")
    with pytest.raises(DiagramError):
        parse_pd("foo: 1\nX[1,2,2,1]")


def test_braid_conventions():
    hopf = from_braid([1, 1], colors=[1, 2])
    assert hopf.signs == (1, 1)
    assert hopf.linking_number(0, 1) == 1
    chain = from_braid([1, 1, 2, 2])
    assert chain.mu == 3
    assert [chain.linking_number(a, b) for a, b in ((0, 1), (0, 2), (1, 2))] == [1, 0, 1]


@settings(max_examples=60, deadline=None)
@given(braids)
def test_text_and_json_round_trip(word):
    d = from_braid(word)
    assert parse_pd(d.to_text()) == d
    assert ColoredDiagram.from_json(d.to_json()) == d


@settings(max_examples=60, deadline=None)
@given(braids)
def test_mirror_and_switch(word):
    d = from_braid(word)
    m = d.mirror()
    assert m.signs == tuple(-s for s in d.signs)
    assert m.mirror() == d
    s = d.switch(0)
    assert s.signs[0] == -d.signs[0] and s.signs[1:] == d.signs[1:]
    assert s.mu == d.mu


@settings(max_examples=60, deadline=None)
@given(braids)
def test_reversal_preserves_signs(word):
    d = from_braid(word)
    assert d.reverse().signs == d.signs
    for a in range(d.mu):
        for b in range(a + 1, d.mu):
            assert d.reverse().linking_number(a, b) == d.linking_number(a, b)


def test_smoothing_changes_component_count():
    d = from_braid([1, 1, 1])
    switched, smoothed = d.crossing_skein(0)
    assert switched.mu == 1
    assert smoothed.mu == 2


def test_recolor_validation():
    d = from_braid([1, 1])
    with pytest.raises(DiagramError):
        d.recolor([1, 3])
    assert d.recolor([2, 1]).n == 2


def test_disjoint_union_is_split():
    d = from_braid([1, 1, 1]).disjoint_union(parse_pd("O[1]"))
    assert d.mu == 2
    assert d.is_split_visibly()

import pytest
from hypothesis import given, settings, strategies as st

from conwaypot.ccomplex import (
    CComplexData,
    CComplexError,
    assemble_AF,
    from_seifert_matrix,
    negate_key,
    potential,
    sign_keys,
    validate,
)
from conwaypot.laurent import LaurentPoly, PotentialValue
from conwaypot.moves import (
    apply_script,
    build_RVI_family,
    move_M1,
    move_M3,
    random_ccomplex,
    skein_RII,
    skein_RIV,
    skein_RV,
)
from conwaypot.properties import verify_skein

seeds = st.integers(0, 10 ** 6)


def test_sign_keys_and_negation():
    assert sign_keys(2) == ["--", "-+", "+-", "++"]
    assert negate_key("+-+") == "-+-"


def test_seifert_surface_case():
    pv = potential(from_seifert_matrix([[-1, 1], [0, -1]]))
    t = LaurentPoly.var(1, 0)
    assert pv == PotentialValue(t ** 2 - 1 + t ** -2, (1,))
    assert potential(from_seifert_matrix([])) == PotentialValue(LaurentPoly.one(1), (1,))


def test_validation_lists_violations():
    bad = CComplexData(2, 1, {"--": ((1,),), "-+": ((2,),), "+-": ((3,),), "++": ((1,),)},
                       (1, 2), (1,), (1, 0))
    v = validate(bad)
    assert any("transpose" in x for x in v)
    assert any("chi_complement" in x for x in v)
    assert any("clasp signs" in x for x in v)
    assert any("component" in x for x in v)
    with pytest.raises(CComplexError) as exc:
        potential(bad)
    assert exc.value.violations == v


def test_missing_forms_and_bad_shape():
    c = CComplexData(1, 2, {"-": ((1,),)}, (), (0,), (1,))
    v = validate(c)
    assert any("missing" in x for x in v) and any("2x2" in x for x in v)


def test_json_round_trip_and_malformed():
    c = random_ccomplex(3, n=2, g=2)
    assert CComplexData.from_json(c.to_json()) == c
    with pytest.raises(CComplexError):
        CComplexData.from_json({"n": 1})


def test_assemble_AF_one_color():
    c = from_seifert_matrix([[2]])
    (entry,), = assemble_AF(c)
    t = LaurentPoly.var(1, 0)
    assert entry == t.scale(2) - t ** -1 * 2


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_M1_and_M3_invariance(seed):
    c = random_ccomplex(seed, n=2 + seed % 2)
    assert potential(move_M1(c, seed)) == potential(c)
    assert potential(move_M3(c, seed, color=1 + seed % c.n)) == potential(c)


def test_M3_block_structure():
    c = random_ccomplex(5, n=2, g=1)
    c2 = move_M3(c, 9, color=1)
    AF = assemble_AF(c2)
    neg = [[-x for x in row] for row in AF]
    t1 = LaurentPoly.var(2, 0)
    # corner of -A_F': [[0, t1*P], [-t1^-1*P, *]] with P = prod over j != 1 of (t_j - t_j^-1)
    P = LaurentPoly.conway_factor(2, 1)
    assert neg[0][0].is_zero()
    assert neg[0][1] == t1 * P
    assert neg[1][0] == -(t1 ** -1) * P


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_skein_constructions(seed):
    c = random_ccomplex(seed, n=2 + seed % 2)
    plus, minus = skein_RII(c, 1, seed)
    assert verify_skein("RII", [potential(plus), potential(minus), potential(c)], (1,))
    pp, mm = skein_RIV(c, (1, 2), seed)
    assert verify_skein("RIV", [potential(pp), potential(mm), potential(c)], (1, 2))
    assert verify_skein("RV", [potential(skein_RV(c, (2, 1))), potential(c)], (2, 1))


@settings(max_examples=15, deadline=None)
@given(seeds)
def test_RVI_family(seed):
    base = random_ccomplex(seed, n=3, g=seed % 3)
    fam = build_RVI_family(base, seed)
    assert len(fam) == 7 and fam[-1] is base
    assert verify_skein("RVI", [potential(c) for c in fam], (1, 2, 3))


def test_move_errors():
    c = from_seifert_matrix([[1]])
    with pytest.raises(ValueError):
        move_M1(c, 0)
    with pytest.raises(ValueError):
        skein_RIV(random_ccomplex(1, n=2), (1, 1))
    with pytest.raises(ValueError):
        build_RVI_family(random_ccomplex(1, n=2))


def test_apply_script_replays():
    c = random_ccomplex(11, n=2, g=1)
    script = [{"move": "M1", "params": {"colors": [1, 2]}, "seed": 4},
              {"move": "M3", "params": {"color": 2}, "seed": 5}]
    a = apply_script(c, script)
    assert a == apply_script(c, script)
    assert potential(a) == potential(c)
    with pytest.raises(ValueError):
        apply_script(c, [{"move": "M9"}])


def test_transformations_of_data():
    c = random_ccomplex(2, n=2, g=2)
    assert c.mirror().mirror() == c
    assert c.reverse().reverse() == c
    assert c.reverse_color(1).reverse_color(1) == c
    assert not validate(c.reverse_color(2))

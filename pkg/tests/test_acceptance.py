"""Acceptance criteria; each test prints one PASS/FAIL line."""

import time
from dataclasses import replace

import pytest

from conwaypot.ccomplex import CComplexError, potential, validate
from conwaypot.dataset import load_dataset
from conwaypot.fox import alexander_polynomial, crosscheck, crosscheck_values
from conwaypot.laurent import LaurentPoly, PotentialValue
from conwaypot.moves import random_ccomplex, skein_RII
from conwaypot.properties import (
    check_connected_sum,
    check_reversal_mirror,
    check_symmetry,
    check_torres,
    verify_skein,
)
from conwaypot.seifert import SeifertSurface, conway_from_seifert, conway_of_diagram
from conwaypot.suites import (
    Report,
    kauffman_potential,
    run_curated,
    run_moves,
    run_oracle,
    run_props,
    run_skein,
)

SEED = 7


@pytest.fixture
def verdict(capsys):
    def emit(label, ok, detail=""):
        with capsys.disabled():
            print("\n%s %s%s" % ("PASS" if ok else "FAIL", label,
                                 " (%s)" % detail if detail else ""))
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def ds():
    return load_dataset()


def z(n, i):
    return LaurentPoly.conway_factor(n, i)


def failures(rep, names=None):
    return [r for r in rep.results if not r["pass"] and (names is None or r["check"] in names)]


def test_1_chain_reproduction(ds, verdict):
    start = time.perf_counter()
    e = ds["chain3"]
    colored = potential(e.ccomplexes["colored"])
    ordered = potential(e.ccomplexes["ordered"])
    x = LaurentPoly.var(2, 0)
    t2 = LaurentPoly.var(3, 1)
    merged = ordered.substitute([(1, 0, 1), (1, 0, 1), (1, 1, 1)], 2)
    ok = (colored == PotentialValue(x - x ** -1) and ordered == PotentialValue(t2 - t2 ** -1)
          and merged == colored)
    dt = time.perf_counter() - start
    verdict("criterion 1: colored %s, ordered %s, merged %s"
            % (colored.format(), ordered.format(), merged.format()), ok and dt < 1,
            "%.3fs" % dt)


def test_2_kauffman_consistency(ds, verdict):
    start = time.perf_counter()
    checked, bad = [], []
    for e in ds.values():
        if e.diagram.n != 1:
            continue
        for label, c in e.ccomplexes.items():
            lhs = (potential(c) * PotentialValue(z(1, 0))).numerator
            surf = SeifertSurface(e.diagram)
            # det(-tA + t^-1 A^T) on a Seifert surface read off the diagram
            rhs = conway_from_seifert(surf.matrix() if surf.connected else [],
                                      split=not surf.connected)
            checked.append(e.id)
            if lhs != rhs:
                bad.append(e.id)
    t = LaurentPoly.var(1, 0)
    named = {"unknot": LaurentPoly.one(1), "trefoil": t ** 2 - 1 + t ** -2,
             "figure_eight": -(t ** 2) + 3 - t ** -2}
    for k, want in named.items():
        if conway_of_diagram(ds[k].diagram) != want:
            bad.append(k + " value")
    dt = time.perf_counter() - start
    verdict("criterion 2: Kauffman consistency on %d single-color entries" % len(checked),
            not bad and len(checked) >= 6 and dt < 1, "failed: %s; %.3fs" % (bad, dt))


def test_3_move_invariance(verdict):
    start = time.perf_counter()
    rep = Report("moves", SEED, 200)
    run_moves(rep, SEED, 200)
    inv = [r for r in rep.results if r["check"].startswith("invariance")]
    counts = {k: sum(1 for r in inv if r["check"] == k)
              for k in ("invariance_M1", "invariance_M3")}
    dt = time.perf_counter() - start
    verdict("criterion 3: M1 x%d, M3 x%d invariance" % (counts["invariance_M1"],
                                                   counts["invariance_M3"]),
            not failures(rep) and min(counts.values()) >= 200 and dt < 30,
            "%d failures; %.1fs" % (len(failures(rep)), dt))


def test_4_skein_suite(ds, verdict):
    start = time.perf_counter()
    rep = Report("skein", SEED, 200)
    run_skein(rep, SEED, 200, ds)
    counts = {k: sum(1 for r in rep.results if r["check"] == k)
              for k in ("RII", "RIV", "RV", "RVI", "RI", "RIII")}
    enough = (counts["RII"] >= 200 and counts["RIV"] >= 100 and counts["RV"] >= 100
              and counts["RVI"] >= 50 and counts["RI"] >= 1 and counts["RIII"] >= 1)
    dt = time.perf_counter() - start
    verdict("criterion 4: skein %s" % counts, not failures(rep) and enough and dt < 60,
            "%d failures; %.1fs" % (len(failures(rep)), dt))


def test_5_oracle_crosscheck(ds, verdict):
    start = time.perf_counter()
    kinds, bad, links = set(), [], set()
    for e in ds.values():
        for label, c in e.ccomplexes.items():
            d = e.diagram if c.n == e.diagram.n else e.ordered_diagram()
            r = crosscheck(potential(c), d, e.id)
            links.add(e.id)
            if not r["pass"]:
                bad.append("%s/%s" % (e.id, label))
            kinds.add("n>=2" if c.n >= 2 else ("knot" if e.mu == 1 else "n=1 link"))
    dt = time.perf_counter() - start
    verdict("criterion 5: oracle on %d links, cases %s" % (len(links), sorted(kinds)),
            not bad and len(links) >= 6 and len(kinds) == 3 and dt < 10,
            "failed: %s; %.2fs" % (bad, dt))


def test_6_symmetries_everywhere(ds, verdict):
    rep = Report("all", SEED, 50)
    run_curated(rep, ds)
    run_moves(rep, SEED, 50)
    run_skein(rep, SEED, 50, ds)
    run_props(rep, SEED, 50, ds)
    run_oracle(rep, SEED, 50, ds)
    pool = len(rep._pool)
    rep.sweep_symmetries()
    sym = [r for r in rep.results if r["check"] in ("inversion", "negation")]
    bad = [r for r in sym if not r["pass"]]
    verdict("criterion 6: inversion and negation on %d produced potentials" % pool,
            not bad and len(sym) == 2 * pool and pool > 100, "%d failures" % len(bad))


def test_7_mirror_and_reversal(ds, verdict):
    mirrored, bad = [], []
    for e in ds.values():
        for label, c in e.ccomplexes.items():
            pv = potential(c)
            if potential(c.mirror()) != check_reversal_mirror(pv, c.mu, which="mirror"):
                bad.append(e.id)
            mirrored.append(e.id)
    chain = ds["chain3"]
    for label, c in chain.ccomplexes.items():
        r = c
        for col in range(1, c.n + 1):
            r = r.reverse_color(col)
        if potential(r) != potential(c) or potential(c.reverse()) != potential(c):
            bad.append("chain3/%s reversal" % label)
    verdict("criterion 7: mirror on %d complexes, reversal on chain3" % len(mirrored),
            not bad and len(set(mirrored)) >= 3, "failed: %s" % bad)


def test_8_connected_sum(ds, verdict):
    e = ds["trefoil_figure_eight"]
    a, b = (potential(next(iter(ds[s].ccomplexes.values()))) for s in e.summands)
    want = check_connected_sum(a, b, 1)
    got = potential(next(iter(e.ccomplexes.values())))
    piped = kauffman_potential(e.diagram)
    verdict("criterion 8: %s = %s" % (e.id, want.format()), got == want and piped == want)


def test_9_torres(ds, verdict):
    results = []
    for eid in ("hopf2_pos", "hopf2_neg", "chain3"):
        e = ds[eid]
        c = e.ccomplexes[e.torres["of"]]
        d = e.diagram if c.n == e.diagram.n else e.ordered_diagram()
        lk = [d.linking_number(0, k) for k in range(1, d.n)]
        sub = potential(next(iter(ds[e.torres["sublink"]].ccomplexes.values())))
        results.append((eid, lk, check_torres(potential(c), lk, sub).passed))
    verdict("criterion 9: Torres %s" % results, all(r[2] for r in results))


def test_10_negative_controls(ds, verdict):
    fired = {}
    # corrupted transpose pairing
    tref = ds["trefoil"].ccomplexes["seifert"]
    broken = replace(tref, forms={"-": ((-1, 1), (0, -1)), "+": ((-1, 1), (0, -1))})
    try:
        potential(broken)
        fired["transpose"] = False
    except CComplexError as exc:
        fired["transpose"] = any("transpose" in v for v in exc.violations)
    # wrong mu declaration: the knot's potential claimed for a 2-component link
    pv = potential(tref)
    fired["mu_symmetry"] = not check_symmetry(pv, 2, "inversion").passed
    delta = alexander_polynomial(ds["trefoil"].diagram)
    fired["mu_oracle"] = not crosscheck_values(pv, delta, 2)["pass"]
    fired["mu_mirror"] = (potential(tref.mirror())
                          != check_reversal_mirror(pv, 2, which="mirror"))
    # perturbed A^eps, keeping the transpose pairing
    bumped = replace(tref, forms={"-": ((0, 1), (0, -1)), "+": ((0, 0), (1, -1))})
    fired["curated"] = potential(bumped) != ds["trefoil"].potential_expected("seifert")
    fired["oracle"] = not crosscheck(potential(bumped), ds["trefoil"].diagram)["pass"]
    c = random_ccomplex(SEED, n=2, g=2)
    plus, minus = skein_RII(c, 1, SEED)
    plus_forms = {k: tuple(tuple(v + (i == j == 0) for j, v in enumerate(r))
                           for i, r in enumerate(m)) for k, m in plus.forms.items()}
    plus_bad = replace(plus, forms=plus_forms)
    assert not validate(plus_bad)
    fired["skein"] = not verify_skein("RII", [potential(plus_bad), potential(minus),
                                             potential(c)], (1,)).passed
    verdict("criterion 10: negative controls %s" % fired, all(fired.values()))

import json

import pytest

from pgroupcoh.report import VerificationReport
from pgroupcoh.verify import (
    _check_equal,
    _orbits,
    classify_extensions,
    ring_expectation,
    run_suite,
    verify_automorphisms,
    verify_cor5,
    verify_lemma4,
    verify_theorem3,
)


def test_ring_expectation_consistent():
    for n in (3, 4, 5):
        E = ring_expectation(3, n)
        for id, deg, lhs, rhs, prov, anchor in E.relations:
            assert prov in ("PAPER", "DERIVED", "TRIVIAL")
            assert anchor
            for c, names in lhs:
                total = 0
                for nm in names:
                    base, _, exp = nm.partition("^")
                    total += E.degrees[base] * (int(exp) if exp else 1)
                assert total == deg, id
        assert E.max_degree() == 9
    E = ring_expectation(3, 3)
    assert E.orders["chi1"][0] == 1


def test_theorem3_reports(cat33):
    for n in (3, 4):
        rep = verify_theorem3(3, n)
        assert rep.ok, rep.summary_lines()
        assert not rep.notes or all("reading holds" in x for x in rep.notes)
    rep = verify_theorem3(3, 3)
    assert rep["mu.nu"].passed and rep["chi2.chi2"].passed
    assert rep["H6(Z).exponent"].computed == 9


def test_power_sum_flag():
    rep = verify_theorem3(3, 3)
    a = rep["power_sum(3,2)"]
    assert a.computed == 2 and a.note


def test_cutoff_skips_relations():
    rep = verify_theorem3(3, 3, cutoff=7)
    assert rep.ok
    assert any("alpha^p.mu=beta^p.nu" in x for x in rep.notes)


def test_lemma4_and_cor5():
    for n in (3, 4):
        assert verify_lemma4(3, n).ok
    r3, r4 = verify_cor5(3, 3), verify_cor5(3, 4)
    assert r3.ok and r4.ok
    assert r3["mu.nu"].computed == "nonzero"
    assert r4["mu.nu"].computed == "zero"


def test_extensions():
    rep = classify_extensions(3, 3)
    assert rep.ok
    assert rep.normalization["H2(CpxCp;Z/3)"]["orbit_sizes"] == [1, 2, 8, 16]


def test_automorphism_laws(cat34):
    assert verify_automorphisms(cat34).ok


def test_orbits_helper():
    elems = list(range(6))
    orbits = _orbits(elems, [lambda e: (e + 2) % 6])
    assert sorted(map(sorted, orbits)) == [[0, 2, 4], [1, 3, 5]]


def test_failure_carries_witness(cat33):
    rep = VerificationReport("t")
    ok = _check_equal(rep, "alpha=beta", "-", "SELF-CHECK", cat33["alpha"], cat33["beta"], "beta")
    assert not ok and not rep.ok
    w = rep["alpha=beta"].witness
    assert w["degree"] == 2 and w["lhs"] and w["rhs"]
    with pytest.raises(ValueError):
        rep.add("x", "-", "GUESS", 1, 1, True)


def test_json_deterministic():
    a = verify_theorem3(3, 3).dumps()
    b = verify_theorem3(3, 3).dumps()
    assert a == b
    data = json.loads(a)
    assert set(data) >= {"group", "p", "n", "cutoff", "assertions", "normalization"}
    assert "timings" not in data
    assert all({"id", "anchor", "expected", "computed", "status"} <= set(x) for x in data["assertions"])


def test_properties_seeded(properties_report):
    assert properties_report.ok
    from pgroupcoh.verify import verify_properties

    a = verify_properties(seed=5, instances=20)
    b = verify_properties(seed=5, instances=20)
    assert a.ok and a.dumps() == b.dumps()


def test_run_suite_unknown():
    with pytest.raises(ValueError):
        run_suite("nope")

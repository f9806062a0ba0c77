from pgroupcoh.catalog import build_catalog, default_cutoff, zeta_targets
from pgroupcoh.cohomology import class_rank, cohomology, express, hom_values, restriction


def test_default_cutoff():
    assert default_cutoff(3) == 9


def test_degree_two_classes(cat33):
    d = cat33.data
    # alpha, beta are dual to A, B via H^2(G; Z) = Hom(G, Q/Z); the values are read mod p
    a, b = cat33["alpha"], cat33["beta"]
    assert a.order() == 3 and b.order() == 3
    assert express(a, [b]) is None
    assert hom_values(cat33["y"], [d.A, d.B, d.C]) == [1, 0, 0]
    assert hom_values(cat33["y'"], [d.A, d.B, d.C]) == [0, 1, 0]
    H2 = cohomology(d.R, 0, 2)
    assert all(express(g, [a, b]) is not None for g in H2.generators)


def test_chi_classes(cat33, cat34):
    assert cat33["chi1"].is_zero()
    assert cat33["chi2"].order() == 3
    assert cat34["chi1"].order() == 3
    assert cat34["chi2"].order() == 9
    assert cat34["chi1"] * cat34["chi1"] == 3 * cat34["chi2"]


def test_mu_nu(cat33, cat34):
    for cat in (cat33, cat34):
        mu, nu = cat["mu"], cat["nu"]
        assert mu.order() == 3 and nu.order() == 3
        assert cat["alpha"] * mu == cat["beta"] * nu
        assert cat.normalization["mu_nu_solutions"] >= 1


def test_zeta(cat33, cat34):
    assert cat33["zeta"].order() == 9
    assert cat34["zeta"].order() == 27
    assert cat33.normalization["zeta"]["lambda"] in (1, -1)
    for name, inc, RM, target in zeta_targets(cat33):
        assert restriction(inc, cat33["zeta"], RM) == target


def test_mod_p_completions(cat33, cat34):
    p = 3
    assert class_rank([cat33[k] for k in ("x", "x'", "Y", "Y'")], p) == 4
    assert cat33.normalization["Y_admissible"] > 0
    assert class_rank([cat34[k] for k in ("x", "x'", "u'y", "u'y'")], p) == 4
    assert cat34.normalization["u_prime"]["lambda"] != 0


def test_partial_catalog_n5():
    cat = build_catalog(3, 5, 6, full=False)
    assert "zeta" not in cat
    assert cat.normalization["u_prime"]["lambda"] == 0
    assert cat["chi1"].order() == 9

import pytest

from pgroupcoh.families import p_data, splits_off, subgroup_from_generators, trailing_subgroup
from pgroupcoh.groups import (
    GL2_automorphisms,
    GroupHom,
    direct_product,
    inner_automorphism,
    make_cyclic,
    make_elem_abelian,
    make_M,
    make_P,
    parse_group_spec,
)


def test_P_presentation():
    for n in (3, 4, 5):
        G = make_P(3, n)
        assert G.order == 3 ** n
        A, B, C = (G.gen_idx(i) for i in range(3))
        q = 3 ** (n - 2)
        assert G.element_order(A) == 3 and G.element_order(B) == 3 and G.element_order(C) == q
        # [A, B] = A^-1 B^-1 A B = C^{p^{n-3}}
        assert G.commutator(A, B) == G.power_idx(C, 3 ** (n - 3))
        assert sorted(G.center()) == sorted(G.closure([C]))
        assert G.exponent() == q if n > 3 else G.exponent() == 3
        assert not G.is_abelian()


def test_M_presentation():
    G = make_M(3, 3)
    B, A = G.gen_idx(0), G.gen_idx(1)
    assert G.order == 27
    assert G.element_order(A) == 9
    assert G.mul(G.mul(B, A), G.inv(B)) == G.power_idx(A, 4)
    assert len(G.derived_subgroup()) == 3
    assert "A^9" in G.presentation_text()


def test_group_axioms_sampled():
    for G in (make_P(3, 3), make_M(3, 4), make_elem_abelian(3, 3)):
        G.check_consistency(samples=300, seed=1)
        for a in range(0, G.order, 7):
            assert G.mul(a, G.inv(a)) == 0
            assert G.index(G.element(a)) == a


def test_direct_product_and_elementary():
    E = make_elem_abelian(3, 2)
    assert E.order == 9 and E.is_abelian() and E.exponent() == 3
    G = direct_product(make_cyclic(3), make_cyclic(9))
    assert G.order == 27 and G.exponent() == 9
    assert make_cyclic(1).order == 1


def test_homomorphisms():
    d = p_data(3, 3, 4)
    assert d.quo.surjective and not d.quo.injective
    assert sorted(d.quo.kernel()) == sorted(d.G.closure([d.C]))
    assert d.incH.injective and len(d.incH.image()) == 9
    with pytest.raises(ValueError):
        GroupHom(make_cyclic(3), make_cyclic(9), [1])  # 1^3 != 0 in C9


def test_gl2_and_inner():
    Q = make_elem_abelian(3, 2)
    auts = GL2_automorphisms(Q, 3)
    assert len(auts) == 48 and all(a.bijective for a in auts)
    d = p_data(3, 3, 4)
    conj = inner_automorphism(d.incH, d.A)
    assert conj.bijective
    # conjugation by A moves B inside <B, C>
    B_in_H = d.incH.preimage_map()[d.B]
    assert conj(B_in_H) != B_in_H


def test_series_and_subgroups():
    G = make_P(3, 4)
    H, inc = trailing_subgroup(G, 1)
    assert H.order == 27 and H.is_abelian()
    assert splits_off(H) and not splits_off(G)
    M, incM = subgroup_from_generators(G, [G.gen_idx(0), G.gen_idx(2)], "<A,C>")
    assert M.order == 27 and incM.injective
    with pytest.raises(ValueError):
        subgroup_from_generators(G, [G.gen_idx(0), G.gen_idx(1)], "bad")


def test_parse_group_spec():
    assert parse_group_spec("C:9").order == 9
    assert parse_group_spec("P:p=3,n=4").order == 81
    assert parse_group_spec("M:p=3,n=3").order == 27
    assert parse_group_spec("E:p=3,rank=2").order == 9
    for bad in ("X:3", "P:p=2,n=3", "P:p=3", "C:zero"):
        with pytest.raises(ValueError):
            parse_group_spec(bad)

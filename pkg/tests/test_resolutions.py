from pathlib import Path

import pytest

from pgroupcoh.families import p_data, standard_resolution
from pgroupcoh.groups import make_cyclic, make_elem_abelian, make_M, make_P
from pgroupcoh.resolutions import (
    ResolutionError,
    bar_resolution,
    cyclic_resolution,
    diagonal_map,
    lift_chain_map,
    restricted_resolution,
    tensor_resolution,
    validate_resolution,
)

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize("G, D", [
    (make_cyclic(3), 8), (make_cyclic(9), 6), (make_elem_abelian(3, 2), 6),
    (make_elem_abelian(3, 3), 4), (make_P(3, 3), 7), (make_P(3, 4), 5), (make_M(3, 3), 6),
    (make_M(3, 4), 5),
])
def test_standard_resolutions_valid(G, D):
    R = standard_resolution(G, D)
    info = validate_resolution(R)
    assert info["zbasis_checked"] == sum(R.ranks[:D]) * G.order


def test_ranks():
    # the twisted product has the tensor-product ranks of its pieces
    assert standard_resolution(make_P(3, 3), 5).ranks == [1, 3, 6, 10, 15, 21]
    assert standard_resolution(make_M(3, 3), 4).ranks == [1, 2, 3, 4, 5]
    assert cyclic_resolution(1, 3).ranks == [1, 0, 0, 0]
    assert bar_resolution(make_cyclic(3), 4).ranks == [1, 2, 4, 8, 16]
    R = tensor_resolution(cyclic_resolution(3, 3), cyclic_resolution(9, 3))
    assert R.ranks == [1, 2, 3, 4]
    validate_resolution(R)


def test_trivial_group():
    R = cyclic_resolution(1, 3)
    validate_resolution(R)
    assert R.group.order == 1


def test_bar_small_groups_valid():
    validate_resolution(bar_resolution(make_cyclic(3), 5))
    validate_resolution(bar_resolution(make_P(3, 3), 3))


def test_bar_budget():
    with pytest.raises(ResolutionError):
        bar_resolution(make_P(3, 3), 5)


def test_validation_detects_corruption():
    R = cyclic_resolution(3, 4)
    R.boundary(2, 0)  # fill the cache, then break it
    R._bd_cache[(2, 0)] = {0: 1}
    with pytest.raises(ResolutionError):
        validate_resolution(R)


def test_restricted_resolution_valid():
    d = p_data(3, 3, 5)
    for inc in (d.incH, d.incZ):
        res = restricted_resolution(d.R, inc)
        assert res.ranks == [r * (d.G.order // inc.src.order) for r in d.R.ranks]
        validate_resolution(res)


def test_chain_maps_commute():
    d = p_data(3, 3, 6)
    phi = lift_chain_map(d.quo, d.R, d.RQ)
    assert phi.top == 6 and phi.commutes()
    inc = lift_chain_map(d.incH, d.RH, d.R)
    assert inc.commutes()
    delta = diagonal_map(cyclic_resolution(3, 4))
    assert delta.commutes()
    with pytest.raises(ResolutionError):
        lift_chain_map(d.quo, d.R, d.RQ, upto=7)


def test_lift_shift_and_modulus():
    R = cyclic_resolution(3, 6)
    # the periodicity map F_{k+2} -> F_k of the periodic resolution
    phi = lift_chain_map(None, R, R, seed=[dict(R.unit)], shift=2)
    assert phi.commutes()
    phi3 = lift_chain_map(None, R, R, seed=[dict(R.unit)], shift=1, modulus=3)
    assert phi3.commutes()


@pytest.mark.parametrize("name, G, D", [
    ("cyclic_C3_3", make_cyclic(3), 3),
    ("tensor_E32_4", make_elem_abelian(3, 2), 4),
    ("twisted_P33_3", make_P(3, 3), 3),
    ("twisted_M33_3", make_M(3, 3), 3),
])
def test_golden_dumps(name, G, D):
    assert standard_resolution(G, D).dump() + "\n" == (GOLDEN / f"{name}.txt").read_text()

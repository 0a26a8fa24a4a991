import pytest

from latkit.catalog import std_gram
from latkit.isometry import (
    CapExceeded, IsometryError, acts_as_minus_one, disc_action_trivial,
    group_closure, invariant_sublattice, make_isometry, order,
)
from latkit.lattice import make_lattice


def a2_rotation():
    # alpha1 -> alpha2, alpha2 -> -(alpha1 + alpha2): order 3
    lat = std_gram("A", 2)
    return lat, make_isometry(lat, [[0, -1], [1, -1]])


def test_make_isometry_validation():
    lat = std_gram("A", 2)
    with pytest.raises(IsometryError, match="defect"):
        make_isometry(lat, [[1, 1], [0, 1]])
    make_isometry(lat, [[0, 1], [1, 0]])  # the diagram involution


def test_order_and_inverse():
    lat, rot = a2_rotation()
    assert order(rot) == 3
    assert (rot * rot.inverse()).is_identity()
    assert order(make_isometry(lat, [[-1, 0], [0, -1]])) == 2
    with pytest.raises(CapExceeded):
        order(rot, cap=2)


def test_apply():
    lat, rot = a2_rotation()
    assert rot.apply((1, 0)) == (0, 1)
    assert rot.apply((0, 1)) == (-1, -1)


def test_group_closure_a2_weyl():
    lat, rot = a2_rotation()
    swap = make_isometry(lat, [[0, 1], [1, 0]])
    g = group_closure([rot, swap])
    # full automorphism group of A2 is dihedral of order 12
    assert g.order == 6
    minus = make_isometry(lat, [[-1, 0], [0, -1]])
    g2 = group_closure([rot, swap, minus])
    assert g2.order == 12
    assert rot in g and minus in g2


def test_group_closure_cap():
    lat, rot = a2_rotation()
    swap = make_isometry(lat, [[0, 1], [1, 0]])
    with pytest.raises(CapExceeded):
        group_closure([rot, swap], cap=3)
    with pytest.raises(IsometryError):
        group_closure([])


def test_invariant_sublattice():
    lat, rot = a2_rotation()
    inv, rows = invariant_sublattice(lat, group_closure([rot]))
    assert rows == []  # order-3 rotation of A2 fixes nothing
    swap = make_isometry(lat, [[0, 1], [1, 0]])
    inv, rows = invariant_sublattice(lat, group_closure([swap]))
    assert rows == [[1, 1]]
    assert inv.gram == ((2,),)


def test_disc_action():
    lat = std_gram("A", 2)
    swap = make_isometry(lat, [[0, 1], [1, 0]])
    minus = make_isometry(lat, [[-1, 0], [0, -1]])
    # disc(A2) = Z/3; -1 acts nontrivially, the composite -swap trivially?
    assert not disc_action_trivial(lat, minus)
    assert disc_action_trivial(lat, make_isometry(lat, [[0, -1], [-1, 0]]))
    assert not disc_action_trivial(lat, swap)


def test_acts_as_minus_one():
    lat, rot = a2_rotation()
    minus = make_isometry(lat, [[-1, 0], [0, -1]])
    assert acts_as_minus_one(minus, [[1, 0], [0, 1], [2, 3]])
    assert not acts_as_minus_one(rot, [[1, 0]])


def test_isometries_on_different_lattices_do_not_mix():
    lat, rot = a2_rotation()
    other = make_lattice([[2]])
    one = make_isometry(other, [[1]])
    with pytest.raises(IsometryError):
        rot * one

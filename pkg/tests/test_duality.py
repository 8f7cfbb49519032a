import pytest

from wfcomb.classical import Kind, enumerate_class
from wfcomb.duality import (
    dual_kind,
    dual_of_special,
    dual_partition,
    dual_via_dominance,
    dual_via_step_sequence,
    transport_coords,
)
from wfcomb.errors import NotSpecialError
from wfcomb.partitions import Partition
from wfcomb.springer import FamilyCoords

P = Partition
SY, OO, OE = Kind.SYMPLECTIC, Kind.ORTH_ODD, Kind.ORTH_EVEN


def test_dual_of_special_values():
    assert dual_of_special(P((2, 2)), SY) == P((3, 1, 1))
    assert dual_of_special(P((1, 1)), SY) == P((3,))
    assert dual_of_special(P((3,)), OO) == P((1, 1))
    assert dual_of_special(P((2, 2)), OE) == P((2, 2))
    assert dual_of_special(P((3, 1)), OE) == P((1, 1, 1, 1))
    with pytest.raises(NotSpecialError):
        dual_of_special(P((2, 1, 1)), SY)


def test_dual_partition_general():
    assert dual_partition(P((2, 1, 1)), SY) == P((3, 1, 1))
    assert dual_partition(P((2,)), SY) == P((1, 1, 1))
    assert dual_partition(P((4,)), SY) == P((1, 1, 1, 1, 1))


def test_step_sequence_route_values():
    assert dual_via_step_sequence(P((2,)), SY) == P((1, 1, 1))
    assert dual_via_step_sequence(P((3, 1, 1)), OO) == P((2, 2))
    assert dual_via_step_sequence(P((1, 1)), SY) == P((3,))


def test_dominance_route_values():
    assert dual_via_dominance(P((2, 2)), SY) == P((3, 1, 1))
    assert dual_via_dominance(P((3,)), OO) == P((1, 1))
    assert dual_via_dominance(P((2, 2)), OE) == P((2, 2))
    assert dual_via_dominance(P((1, 1, 1)), OO) == P((2,))  # trims the leading run


def test_routes_agree_and_involution_small():
    setups = ((SY, range(0, 11, 2)), (OO, range(1, 12, 2)), (OE, range(0, 11, 2)))
    for kind, sizes in setups:
        for size in sizes:
            for lam in enumerate_class(size, kind, special_only=True):
                a = dual_of_special(lam, kind)
                assert a == dual_via_step_sequence(lam, kind)
                assert a == dual_via_dominance(lam, kind)
                assert dual_of_special(a, dual_kind(kind)) == lam


def test_order_reversal_sample():
    members = enumerate_class(8, SY)
    for lam in members:
        for mu in members:
            if lam.leq(mu):
                assert dual_partition(mu, SY).leq(dual_partition(lam, SY))


def test_transport_coords():
    # single interval: reversal is the identity
    c = FamilyCoords((0,), (0,))
    assert transport_coords(P((1, 1)), OE, c, defect_positive=False) == c
    # two intervals, positive defect: plain reversal of tau
    c = FamilyCoords((0, 1), (0, 0))
    out = transport_coords(P((4, 2)), SY, c, defect_positive=True)
    assert out.taus == (1, 0) and out.deltas == (0, 0)
    # zero transport stays zero
    z = FamilyCoords.zeros(2)
    assert transport_coords(P((4, 2)), SY, z).taus == (0, 0)
    # defect-0 rule renormalizes by the value on the largest interval
    out = transport_coords(P((3, 3, 1, 1)), OE, FamilyCoords((0, 1), (0, 0)), False)
    assert out.taus == (1, 0)


def test_delta_transport_shifts():
    out = transport_coords(P((4, 2)), SY, FamilyCoords((0, 0), (1, 0)), True)
    assert out.deltas == (1, 0)


def test_transport_round_trips_through_the_duality():
    # Transported labels are admissible on the dual side, and transporting
    # back recovers the original sign-vector class.
    from wfcomb.springer import admissible_sign_vectors, family_coords, signs_from_coords

    setups = ((SY, range(0, 13, 2)), (OO, range(1, 14, 2)), (OE, range(0, 13, 2)))
    for kind, sizes in setups:
        positive = kind is not OE
        for size in sizes:
            for lam in enumerate_class(size, kind, special_only=True):
                dual = dual_of_special(lam, kind)
                for eps in admissible_sign_vectors(lam, kind):
                    coords = family_coords(lam, eps, kind)
                    out = transport_coords(lam, kind, coords, positive)
                    eta = signs_from_coords(dual, out, dual_kind(kind))
                    assert eta in admissible_sign_vectors(dual, dual_kind(kind))
                    back = transport_coords(
                        dual, dual_kind(kind), family_coords(dual, eta, dual_kind(kind)),
                        positive,
                    )
                    assert signs_from_coords(lam, back, kind) == eps

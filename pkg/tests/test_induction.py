import pytest

from wfcomb.classical import INF, Kind, enumerate_class
from wfcomb.duality import dual_partition
from wfcomb.errors import ClassMismatchError, DomainError
from wfcomb.induction import (
    LeviShape,
    cup,
    decompose_regular,
    dominance_floor,
    dominance_floor_bruteforce,
    endoscopic_induce,
    levi_dual,
    levi_induce,
)
from wfcomb.partitions import Partition, partitions_of

P = Partition
SY, OO, OE = Kind.SYMPLECTIC, Kind.ORTH_ODD, Kind.ORTH_EVEN


def test_dominance_floor_values():
    assert dominance_floor(P((3, 2)), OO) == P((3, 1, 1))
    assert dominance_floor(P((3, 1)), SY) == P((2, 2))
    assert dominance_floor(P((3, 1, 1)), OO) == P((3, 1, 1))
    with pytest.raises(DomainError):
        dominance_floor(P((3,)), SY)


def test_dominance_floor_matches_bruteforce():
    for size in range(0, 11):
        for lam in partitions_of(size):
            for kind in (SY, OO, OE):
                try:
                    fast = dominance_floor(lam, kind)
                except DomainError:
                    continue
                assert fast == dominance_floor_bruteforce(lam, kind)


def test_levi_induce_values():
    shape = LeviShape((1,), 1)
    assert levi_induce(shape, (P((1,)), P((1, 1, 1)))) == P((3, 1, 1))
    assert levi_induce(LeviShape((1,), 1), (P((1,)), P((3,)))) == P((5,))
    assert levi_induce(LeviShape((), 2), (P((2, 2, 1)),)) == P((2, 2, 1))
    with pytest.raises(DomainError):
        levi_induce(shape, (P((2,)), P((3,))))
    with pytest.raises(ClassMismatchError):
        levi_induce(shape, (P((1,)), P((2, 1))))


def test_cup_values():
    assert cup(LeviShape((1,), 1), (P((1,)), P((1, 1)))) == P((1, 1, 1, 1))
    assert cup(LeviShape((2,), 0), (P((2,)), P(()))) == P((2, 2))
    assert cup(LeviShape((), 1), (P((2,)),)) == P((2,))


def test_cup_induce_duality_example():
    shape = LeviShape((1,), 1)
    parts = (P((1,)), P((2,)))
    assert dual_partition(cup(shape, parts), SY) == levi_induce(shape, levi_dual(parts))


def test_endoscopic_induce_values():
    data = endoscopic_induce(P((2,)), P((1, 1)))
    assert data.j_plus == (1,) and data.j_minus == (2,)
    assert data.xi[:2] == (1, -1)
    assert data.induced == P((4,))
    assert data.regular and data.tau_rel_dict() == {4: 0}

    data = endoscopic_induce(P((1, 1)), P((1, 1)))
    assert data.j_plus == () and data.induced == P((2, 2))
    assert data.tau_rel_dict() == {2: 1}

    data = endoscopic_induce(P((2, 2)), P(()))
    assert data.induced == P((2, 2)) and data.tau_rel_dict() == {2: 0}

    with pytest.raises(ClassMismatchError):
        endoscopic_induce(P((2, 1, 1)), P(()))


def test_relative_intervals_partition_values():
    data = endoscopic_induce(P((2,)), P((1, 1)))
    values = sorted(v for rel in data.relative for v in rel.values)
    assert values == [0, 4]
    infinite = [rel for rel in data.relative if rel.j_hi == INF]
    assert len(infinite) == 1 and infinite[0].values == (0,)


def test_irregular_pair_detected():
    # one relative interval carries two values: {2,0} for the pair ((2), empty)
    data = endoscopic_induce(P((2,)), P(()))
    assert not data.regular
    with pytest.raises(DomainError):
        data.tau_rel_dict()


def test_endoscopic_inequality_sample():
    for n1, n2 in ((1, 1), (2, 1), (1, 2), (3, 0)):
        for lam1 in enumerate_class(2 * n1, SY, special_only=True):
            for lam2 in enumerate_class(2 * n2, OE, special_only=True):
                data = endoscopic_induce(lam1, lam2)
                union = dual_partition(lam1, SY) | dual_partition(lam2, OE)
                assert union.leq(dual_partition(data.induced, SY))


def test_decompose_traces():
    dec = decompose_regular(P((2, 2)), {2: 0})
    assert (dec.lam1, dec.lam2, dec.n1, dec.n2) == (P((2, 2)), P(()), 2, 0)
    dec = decompose_regular(P((2, 2)), {2: 1})
    assert (dec.lam1, dec.lam2, dec.n1, dec.n2) == (P((1, 1)), P((1, 1)), 1, 1)
    # multiplicity-one top row: the construction routes it through the core
    dec = decompose_regular(P((2,)), {2: 0})
    assert (dec.lam1, dec.lam2) == (P(()), P((1, 1)))
    assert dec.data.regular and dec.data.induced == P((2,))


def test_decompose_conclusions_hold():
    for lam, tau in (
        (P((4, 2)), {4: 0, 2: 0}),
        (P((4, 4, 2, 2)), {4: 1, 2: 1}),
        (P((6, 2, 2, 2)), {6: 0, 2: 1}),
    ):
        dec = decompose_regular(lam, tau)
        assert dec.data.regular
        assert dec.data.tau_rel_dict() == tau
        union = dual_partition(dec.lam1, SY) | dual_partition(dec.lam2, OE)
        assert union == dual_partition(lam, SY)


def test_decompose_rejects_bad_labels():
    with pytest.raises(DomainError):
        decompose_regular(P((2,)), {2: 1})  # multiplicity one forces label 0
    with pytest.raises(ClassMismatchError):
        decompose_regular(P((3, 1)), {})
    with pytest.raises(DomainError):
        decompose_regular(P((2, 2)), {})

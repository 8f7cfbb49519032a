import pytest

from wfcomb.classical import (
    INF,
    Kind,
    SignVector,
    classify,
    enumerate_class,
    intervals,
    is_exceptional,
    is_member,
    jord_bp,
    sign_vectors,
    step_sequence,
)
from wfcomb.errors import ClassMismatchError, DomainError, NotSpecialError
from wfcomb.partitions import Partition

P = Partition
SY, OO, OE = Kind.SYMPLECTIC, Kind.ORTH_ODD, Kind.ORTH_EVEN


def test_classify_examples():
    flags = classify(P((2, 2)))
    assert flags["symp"] and flags["symp-special"]
    assert flags["orth-even"] and flags["orth-even-special"]
    flags = classify(P((2, 1, 1)))
    assert flags["symp"] and not flags["symp-special"]
    flags = classify(P((3, 1, 1)))
    assert flags["orth-odd"] and flags["orth-odd-special"]
    assert not is_member(P((3, 1)), SY)  # odd part with odd multiplicity
    assert not is_member(P((2,)), OE)  # even part with odd multiplicity


def test_jord_bp():
    assert jord_bp(P((2, 2)), SY) == (2,)
    assert jord_bp(P((3, 1, 1)), OO) == (3, 1)
    assert jord_bp(P((2, 2)), OE) == ()
    assert is_exceptional(P((2, 2)))
    assert not is_exceptional(P((3, 1)))
    with pytest.raises(ClassMismatchError):
        jord_bp(P((3, 1)), SY)


def test_intervals_symplectic():
    struct = intervals(P((2,)), SY)
    assert [iv.values for iv in struct] == [(2, 0)]
    assert struct.intervals[0].j_min == 1 and struct.intervals[0].j_max == INF

    struct = intervals(P((1, 1)), SY)
    assert [iv.values for iv in struct] == [(0,)]
    assert struct.intervals[0].j_min == 3 and struct.intervals[0].j_max == INF

    struct = intervals(P((4, 2)), SY)
    assert [iv.values for iv in struct] == [(4, 2), (0,)]
    assert struct.intervals[0].j_min == 1 and struct.intervals[0].j_max == 2


def test_intervals_orthogonal():
    struct = intervals(P((3, 1, 1)), OO)
    assert [iv.values for iv in struct] == [(3,), (1,)]
    top, bottom = struct.intervals
    assert top.j_min is None and top.j_max == 1
    assert bottom.j_min == 2 and bottom.j_max == 3

    struct = intervals(P((3, 3, 1)), OO)
    assert [iv.values for iv in struct] == [(3, 1)]

    struct = intervals(P((3, 1)), OE)
    assert [iv.values for iv in struct] == [(3, 1)]
    assert struct.intervals[0].j_min == 1 and struct.intervals[0].j_max == 2

    with pytest.raises(NotSpecialError):
        intervals(P((2, 1, 1)), SY)


def test_step_sequences():
    assert step_sequence(P((2,)), SY) == (1, 0)
    assert step_sequence(P((3, 1, 1)), OO) == (-1, 1, -1, 0)
    assert step_sequence(P((1, 1)), SY) == (0, 0, 1)
    assert step_sequence(P((2, 2)), OE) == (0, 0, 0)  # exceptional: no intervals
    assert step_sequence(P((3, 1)), OE) == (1, -1, 0)


def test_interval_json_uses_inf_and_null():
    payload = intervals(P((3, 1, 1)), OO).to_json()
    assert payload[0]["j_min"] is None
    payload = intervals(P((2,)), SY).to_json()
    assert payload[0]["j_max"] == "inf"


def test_sign_vectors():
    vec = SignVector.make({3: 1, 1: -1})
    assert vec.value(3) == 1 and vec.value(1) == -1
    with pytest.raises(DomainError):
        vec.value(5)
    # the diagonal quotient stores the lift that is +1 on the largest key
    quo = SignVector.make({3: -1, 1: 1}, diagonal_quotient=True)
    assert quo.value(3) == 1 and quo.value(1) == -1
    assert quo == SignVector.make({3: 1, 1: -1}, diagonal_quotient=True)
    assert len(sign_vectors(P((3, 1, 1)), OO)) == 2
    assert len(sign_vectors(P((2, 2)), SY)) == 2
    assert SignVector.parse("3=1,1=-1").items == ((3, 1), (1, -1))


def test_enumerate_class_counts():
    assert {p.parts for p in enumerate_class(4, SY)} == {
        (4,), (2, 2), (2, 1, 1), (1, 1, 1, 1)
    }
    assert {p.parts for p in enumerate_class(5, OO)} == {
        (5,), (3, 1, 1), (2, 2, 1), (1, 1, 1, 1, 1)
    }
    assert len(enumerate_class(4, SY, special_only=True)) == 3
    assert len(enumerate_class(5, OO, special_only=True)) == 3


def test_special_counts_match_across_the_three_side_by_side():
    for n in range(0, 8):
        assert len(enumerate_class(2 * n, SY, special_only=True)) == len(
            enumerate_class(2 * n + 1, OO, special_only=True)
        )

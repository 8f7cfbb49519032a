import pytest

from wfcomb.classical import Kind, SignVector, intervals, jord_bp
from wfcomb.errors import HypothesisError, NotSpecialError
from wfcomb.partitions import Partition
from wfcomb.springer import (
    admissible_sign_vectors,
    family_coords,
    partition_of_special_symbol,
    signs_from_coords,
    special_closure,
    special_closure_bruteforce,
    special_closure_pair,
    springer_k,
    springer_symbol,
)
from wfcomb.symbols import Symbol, is_special_symbol, same_family

P = Partition
SY, OO, OE = Kind.SYMPLECTIC, Kind.ORTH_ODD, Kind.ORTH_EVEN


def sv(mapping, quotient=False):
    return SignVector.make(mapping, quotient)


def ones(lam, kind):
    return SignVector.ones(jord_bp(lam, kind), kind.orthogonal)


def test_series_index():
    assert springer_k(P((2, 2)), sv({2: -1}), SY) == 0
    assert springer_k(P((2,)), sv({2: -1}), SY) == 1
    assert springer_k(P((2,)), sv({2: 1}), SY) == 0
    assert springer_k(P((3, 1, 1)), ones(P((3, 1, 1)), OO), OO) == 1
    assert springer_k(P((3, 1, 1)), sv({3: 1, 1: -1}, True), OO) == 1
    assert springer_k(P((3, 1)), sv({3: 1, 1: -1}, True), OE) == 2
    assert springer_k(P((3, 1)), ones(P((3, 1)), OE), OE) == 0


def test_symbol_odd_orthogonal_all_ones():
    datum = springer_symbol(P((3, 1, 1)), ones(P((3, 1, 1)), OO), OO)
    assert datum.symbol == Symbol((3, 1, 0), (2, 0))
    assert is_special_symbol(datum.symbol)
    assert datum.k == 1 and not datum.lift_negated


def test_symbol_odd_orthogonal_swap():
    datum = springer_symbol(P((3, 1, 1)), sv({3: 1, 1: -1}, True), OO)
    assert datum.symbol == Symbol((2, 1), (0,))
    assert datum.symbol.rank() == 2 and datum.symbol.defect() == 1
    # same family as the all-ones symbol: the pair is interval-constant
    assert same_family(datum.symbol, Symbol((2, 0), (1,)))


def test_symbol_symplectic_all_ones_values():
    table = {
        (2,): Symbol((1,), ()),
        (1, 1): Symbol((1, 0), (1,)),
        (4,): Symbol((2,), ()),
        (2, 2): Symbol((2, 0), (1,)),
        (2, 1, 1): Symbol((2, 1), (0,)),
        (1, 1, 1, 1): Symbol((2, 1, 0), (2, 1)),
    }
    for parts, want in table.items():
        lam = P(parts)
        assert springer_symbol(lam, ones(lam, SY), SY).symbol == want


def test_symbol_even_orthogonal_all_ones_values():
    table = {
        (): Symbol((), ()),
        (1, 1): Symbol((1,), (0,)),
        (3, 1): Symbol((2,), (0,)),
        (2, 2): Symbol((1,), (1,)),
        (1, 1, 1, 1): Symbol((2, 1), (1, 0)),
    }
    for parts, want in table.items():
        lam = P(parts)
        assert springer_symbol(lam, ones(lam, OE), OE).symbol == want


def test_symbol_hypothesis_gate():
    with pytest.raises(HypothesisError):
        springer_symbol(P((2,)), sv({2: -1}), SY)
    with pytest.raises(HypothesisError):
        springer_symbol(P((3, 1)), sv({3: 1, 1: -1}, True), OE)


def test_special_closures():
    assert special_closure(P((2, 1, 1)), SY) == P((2, 2))
    assert special_closure(P((2, 2)), SY) == P((2, 2))
    assert special_closure(P((2, 2, 1)), OO) == P((3, 1, 1))
    assert special_closure(P((3, 2, 2, 1)), OE) == P((3, 3, 1, 1))
    for lam, kind in ((P((4, 1, 1)), SY), (P((2, 2, 1)), OO), (P((3, 2, 2, 1)), OE)):
        assert special_closure(lam, kind) == special_closure_bruteforce(lam, kind)


def test_special_closure_pair():
    lam = P((3, 1, 1))
    assert special_closure_pair(lam, sv({3: 1, 1: -1}, True), OO) == lam
    assert special_closure_pair(lam, ones(lam, OO), OO) == lam
    # non-constant sign vector on a single interval collapses strictly upward
    lam = P((4, 2, 2))
    up = special_closure_pair(lam, sv({4: 1, 2: -1}), SY)
    assert up == P((4, 4)) and lam < up
    lam = P((5, 3, 3, 1))
    up = special_closure_pair(lam, sv({5: -1, 3: 1, 1: -1}, True), OE)
    assert up == P((5, 5, 1, 1)) and lam < up


def test_admissible_sign_vectors():
    # two intervals modulo the diagonal: exactly two classes
    vecs = admissible_sign_vectors(P((3, 1, 1)), OO)
    assert {v.items for v in vecs} == {((3, 1), (1, 1)), ((3, 1), (1, -1))}
    # the smallest symplectic interval (2,0) forces +1 there
    vecs = admissible_sign_vectors(P((2, 2)), SY)
    assert {v.items for v in vecs} == {((2, 1),), ((2, -1),)}
    vecs = admissible_sign_vectors(P((2,)), SY)
    assert {v.items for v in vecs} == {((2, 1),)}
    vecs = admissible_sign_vectors(P((4, 2, 2)), SY)
    assert {v.items for v in vecs} == {((4, 1), (2, 1))}


def test_family_coords_round_trip():
    for lam, kind in (
        (P((3, 1, 1)), OO),
        (P((2, 2)), SY),
        (P((4, 2)), SY),
        (P((3, 3, 1, 1)), OE),
    ):
        for eps in admissible_sign_vectors(lam, kind):
            coords = family_coords(lam, eps, kind)
            assert all(d == 0 for d in coords.deltas)
            assert signs_from_coords(lam, coords, kind) == eps


def test_family_coords_values():
    coords = family_coords(P((3, 1, 1)), sv({3: 1, 1: -1}, True), OO)
    assert coords.taus == (0, 1) and coords.deltas == (0, 0)
    coords = family_coords(P((3, 1, 1)), ones(P((3, 1, 1)), OO), OO)
    assert coords.taus == (0, 0)


def test_partition_of_special_symbol_inverts():
    for kind, size in ((SY, 8), (OO, 9), (OE, 8)):
        from wfcomb.classical import enumerate_class

        for lam in enumerate_class(size, kind, special_only=True):
            sym = springer_symbol(lam, ones(lam, kind), kind).symbol
            assert partition_of_special_symbol(sym, kind) == lam
    with pytest.raises(NotSpecialError):
        partition_of_special_symbol(Symbol((2, 1), (0,)), SY)

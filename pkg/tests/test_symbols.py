import pytest

from wfcomb.errors import DomainError, UnsupportedDefectError
from wfcomb.partitions import Partition
from wfcomb.symbols import (
    Bipartition,
    Symbol,
    bipartition_of,
    dual_symbol,
    family_key,
    family_members,
    is_special_symbol,
    same_family,
    special_member,
    special_symbols,
    symbol_from_bipartition,
)

P = Partition


def bp(a, b):
    return Bipartition(P(a), P(b))


def test_rank_and_defect():
    assert Symbol((2, 0), (0,)).rank() == 1
    assert Symbol((2, 0), (0,)).defect() == 1
    assert Symbol((0,), (0,)).rank() == 0
    assert Symbol((3, 1, 0), (1, 0)).rank() == 1  # shift of the first symbol
    with pytest.raises(DomainError):
        Symbol((1, 1), ())


def test_equivalence_and_normalize():
    assert Symbol((3, 1, 0), (1, 0)) == Symbol((2, 0), (0,))
    assert Symbol((3, 1, 0), (1, 0)).normalize() == Symbol((1,), ())
    assert Symbol((0,), (0,)).normalize().X == ()
    assert Symbol((2, 0), (0,)).normalize() == Symbol((1,), ())  # joint zeros drop
    assert Symbol((1,), (2, 0)) == Symbol((2, 0), (1,))  # swap is free
    assert Symbol((2, 0), (0,)).shift(1) == Symbol((2, 0), (0,))
    assert Symbol((2, 0), (0,)).shift(1).X == (3, 1, 0)


def test_symbol_from_bipartition_defect1():
    assert symbol_from_bipartition(bp((1,), ()), 1) == Symbol((2, 0), (0,))
    assert symbol_from_bipartition(bp((), (1,)), 1) == Symbol((1, 0), (1,))
    for n in range(5):
        sym = symbol_from_bipartition(bp((n,) if n else (), ()), 1)
        assert sym.rank() == n and sym.defect() == 1


def test_symbol_from_bipartition_defect0():
    assert symbol_from_bipartition(bp((1,), (1,)), 0) == Symbol((1,), (1,))
    assert symbol_from_bipartition(bp((), ()), 0) == Symbol((), ())
    assert symbol_from_bipartition(bp((2,), (1,)), 0) == Symbol((2,), (1,))


def test_bipartition_of():
    assert bipartition_of(Symbol((2, 0), (0,))) == bp((1,), ())
    assert bipartition_of(Symbol((1,), (1,))) == bp((1,), (1,))
    assert bipartition_of(Symbol((5, 2, 0), (3, 0))) == bp((3, 1), (2,))
    with pytest.raises(UnsupportedDefectError):
        bipartition_of(Symbol((2, 1, 0), ()))


def test_is_special():
    assert is_special_symbol(Symbol((2, 0), (1,)))
    assert is_special_symbol(Symbol((), ()))
    assert not is_special_symbol(Symbol((2, 1), (0,)))  # 2 >= 0 >= 1 fails
    assert is_special_symbol(Symbol((2, 1, 0), (2, 1)))


def test_families():
    sym = Symbol((2, 0), (1,))
    members = family_members(sym)
    assert set(members) == {
        Symbol((2, 0), (1,)),
        Symbol((2, 1), (0,)),
        Symbol((1, 0), (2,)),
        Symbol((2, 1, 0), ()),
    }
    assert special_member(sym) == sym
    assert same_family(sym, Symbol((2, 1), (0,)))
    assert not same_family(sym, Symbol((2,), ()))
    # a symbol with X == Y has no one-row-only entries
    assert family_members(Symbol((1,), (1,))) == (Symbol((1,), (1,)),)
    # keys are alignment independent
    assert family_key(Symbol((2, 0), (0,))) == family_key(Symbol((1,), ()))


def test_dual_symbol():
    assert dual_symbol(Symbol((2, 0), (0,))) == Symbol((1, 0), (1,))
    s = Symbol((5, 2, 0), (3, 0))
    assert dual_symbol(dual_symbol(s)) == s
    assert dual_symbol(s).rank() == s.rank()
    assert dual_symbol(s).defect() == s.defect()


def test_dual_matches_transposed_bipartition():
    for alpha, beta in (((2, 1), (1,)), ((3,), ()), ((1, 1), (2,))):
        b = bp(alpha, beta)
        twisted = bp(P(beta).transpose().parts, P(alpha).transpose().parts)
        assert dual_symbol(symbol_from_bipartition(b, 1)) == symbol_from_bipartition(
            twisted, 1
        )


def test_special_symbol_enumeration():
    assert set(special_symbols(1, 1)) == {Symbol((1,), ()), Symbol((1, 0), (1,))}
    assert set(special_symbols(2, 1)) == {
        Symbol((2,), ()),
        Symbol((2, 0), (1,)),
        Symbol((2, 1, 0), (2, 1)),
    }
    assert set(special_symbols(2, 0)) == {
        Symbol((2,), (0,)),
        Symbol((1,), (1,)),
        Symbol((2, 1), (1, 0)),
    }


def test_text_round_trip():
    s = Symbol((5, 2, 0), (3, 0))
    assert Symbol.parse(s.to_text()) == s
    assert Symbol.parse("X=;Y=").rank() == 0
    payload = s.to_json()
    assert payload["rank"] == s.rank() and payload["X"] == [5, 2, 0]

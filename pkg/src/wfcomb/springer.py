"""Generalized Springer parameter maps for the three classical kinds.

Each machine turns (partition, sign vector) into a symbol: split the
staircase-shifted row sequence into its even and odd entries, lay the two
halves out as interleaved rows, locate the maximal consecutive-integer
blocks of entries appearing in only one row, and swap the blocks selected
by the -1 values of the sign vector.  The supported sign vectors are the
ones whose series index is 0 (symplectic, even orthogonal) or 1 (odd
orthogonal); everything else is rejected.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .classical import (
    Kind,
    SignVector,
    intervals,
    is_member,
    is_special,
    jord_bp,
    enumerate_class,
)
from .errors import (
    ClassMismatchError,
    DomainError,
    HypothesisError,
    InternalCheckError,
    NotSpecialError,
)
from .partitions import Partition
from .symbols import Symbol, special_member

__all__ = [
    "springer_k",
    "SpringerDatum",
    "springer_symbol",
    "partition_of_special_symbol",
    "special_closure",
    "special_closure_bruteforce",
    "special_closure_pair",
    "admissible_sign_vectors",
    "FamilyCoords",
    "family_coords",
    "signs_from_coords",
]


def _check_pair(lam: Partition, eps: SignVector, kind: Kind) -> None:
    if not is_member(lam, kind):
        raise ClassMismatchError(f"{lam} is not in class {kind.value}")
    if eps.keys() != jord_bp(lam, kind):
        raise DomainError(
            f"sign vector keys {eps.keys()} do not match jord_bp {jord_bp(lam, kind)}"
        )


def springer_k(lam: Partition, eps: SignVector, kind: Kind) -> int:
    """Series index of (lam, eps); 0/1/0 selects the range handled here."""
    _check_pair(lam, eps, kind)
    parity = 0 if kind is Kind.SYMPLECTIC else 1
    markers = [v for v in lam.values() if v % 2 == parity and lam.mult(v) % 2 == 1]
    h = sum((-1) ** j * (1 - eps.value(i)) for j, i in enumerate(markers, start=1))
    if kind is Kind.SYMPLECTIC:
        return max(h, -h - 1)
    if kind is Kind.ORTH_ODD:
        return abs(h + 1)
    return abs(h)


@dataclass(frozen=True)
class SpringerDatum:
    symbol: Symbol
    k: int
    lam: Partition
    eps: SignVector
    kind: Kind
    lift_negated: bool = False

    def to_json(self) -> dict:
        return {
            "lambda": self.lam.to_text(),
            "eps": self.eps.to_json(),
            "kind": self.kind.value,
            "k": self.k,
            "lift_negated": self.lift_negated,
            "symbol": self.symbol.to_json(),
        }


def _split_rows(seq: list[int]) -> tuple[list[int], list[int]]:
    """Halved odd entries and halved even entries, order preserved."""
    odds = [(t - 1) // 2 for t in seq if t % 2 == 1]
    evens = [t // 2 for t in seq if t % 2 == 0]
    return odds, evens


def _interleaved(a: list[int], b: list[int], what: str) -> None:
    merged: list[int] = []
    for i in range(len(a)):
        merged.append(a[i])
        if i < len(b):
            merged.append(b[i])
    merged.extend(b[len(a):])
    if any(merged[i] < merged[i + 1] for i in range(len(merged) - 1)):
        raise InternalCheckError(f"rows fail to interleave ({what}): {a} {b}")


def _blocks(a_row: list[int], b_row: list[int]) -> list[tuple[int, ...]]:
    """Maximal consecutive-integer runs inside the one-row-only entries, increasing."""
    a, b = set(a_row), set(b_row)
    singular = sorted((a | b) - (a & b))
    runs: list[tuple[int, ...]] = []
    cur: list[int] = []
    for v in singular:
        if cur and v == cur[-1] + 1:
            cur.append(v)
        else:
            if cur:
                runs.append(tuple(cur))
            cur = [v]
    if cur:
        runs.append(tuple(cur))
    return runs


def _swap_blocks(
    a_row: list[int], b_row: list[int], chosen: list[tuple[int, ...]]
) -> tuple[list[int], list[int]]:
    a, b = set(a_row), set(b_row)
    for run in chosen:
        run_set = set(run)
        ra, rb = a & run_set, b & run_set
        a = (a - ra) | rb
        b = (b - rb) | ra
    return sorted(a, reverse=True), sorted(b, reverse=True)


def _strip_staircase(row: list[int], top: int, what: str) -> tuple[int, ...]:
    """Subtract (top, top-1, ...) from a decreasing row; entries must stay >= 0."""
    out = tuple(row[i] - (top - i) for i in range(len(row)))
    if any(x < 0 for x in out):
        raise InternalCheckError(f"negative symbol entry ({what}): {row}")
    if len(set(out)) != len(out):
        raise InternalCheckError(f"colliding symbol entries ({what}): {row}")
    return out


def _machine(lam: Partition, eps: SignVector, kind: Kind) -> tuple[Symbol, bool]:
    n = lam.size() // 2
    if kind is Kind.SYMPLECTIC:
        rows = 2 * n + 1
        seq = [lam.part(j) + (2 * n + 2 - j) for j in range(1, rows + 1)]
        odds, evens = _split_rows(seq)
        if len(odds) != n + 1 or len(evens) != n:
            raise InternalCheckError(f"bad parity split for {lam} ({kind.value})")
        a_row = [odds[i] + (n - i) for i in range(n + 1)]
        b_row = [evens[i] + (n - 1 - i) for i in range(n)]
        index_values = [0] + sorted(jord_bp(lam, kind))
    elif kind is Kind.ORTH_ODD:
        n = (lam.size() - 1) // 2
        rows = 2 * n + 1
        seq = [lam.part(j) + (2 * n + 1 - j) for j in range(1, rows + 1)]
        odds, evens = _split_rows(seq)
        if len(odds) != n + 1 or len(evens) != n:
            raise InternalCheckError(f"bad parity split for {lam} ({kind.value})")
        a_row = [odds[i] + (n - i) for i in range(n + 1)]
        b_row = [evens[i] + (n - 1 - i) for i in range(n)]
        index_values = sorted(jord_bp(lam, kind))
    else:
        m = lam.size() // 2
        seq = [lam.part(j) + (2 * m - j) for j in range(1, 2 * m + 1)]
        odds, evens = _split_rows(seq)
        if len(odds) != m or len(evens) != m:
            raise InternalCheckError(f"bad parity split for {lam} ({kind.value})")
        a_row = [evens[i] + (m - 1 - i) for i in range(m)]
        b_row = [odds[i] + (m - 1 - i) for i in range(m)]
        index_values = sorted(jord_bp(lam, kind))

    _interleaved(a_row, b_row, kind.value)
    runs = _blocks(a_row, b_row)
    if len(runs) != len(index_values):
        raise InternalCheckError(
            f"{len(runs)} blocks vs {len(index_values)} indices for {lam} ({kind.value})"
        )
    chosen = [
        run
        for run, i in zip(runs, index_values)
        if i != 0 and eps.value(i) == -1
    ]
    a_new, b_new = _swap_blocks(a_row, b_row, chosen)

    negated = False
    if kind is Kind.ORTH_ODD and len(a_new) < len(b_new):
        # The other lift of the diagonal class exchanges the two rows.
        a_new, b_new = b_new, a_new
        negated = True

    if kind is Kind.ORTH_EVEN:
        if len(a_new) != len(b_new):
            raise InternalCheckError(f"unbalanced rows for {lam} ({kind.value})")
        m = len(a_new)
        X = _strip_staircase(a_new, m - 1, kind.value)
        Y = _strip_staircase(b_new, m - 1, kind.value)
    else:
        if len(a_new) != n + 1 or len(b_new) != n:
            raise InternalCheckError(f"unbalanced rows for {lam} ({kind.value})")
        X = _strip_staircase(a_new, n, kind.value)
        Y = _strip_staircase(b_new, n if kind is Kind.SYMPLECTIC else n - 1, kind.value)
    return Symbol(X, Y), negated


_EXPECTED_K = {Kind.SYMPLECTIC: 0, Kind.ORTH_ODD: 1, Kind.ORTH_EVEN: 0}


def springer_symbol(lam: Partition, eps: SignVector, kind: Kind) -> SpringerDatum:
    """Symbol of (lam, eps) in the series handled here (k = 0, 1, 0 per kind)."""
    k = springer_k(lam, eps, kind)
    if k != _EXPECTED_K[kind]:
        raise HypothesisError(
            f"(lam, eps) has series index {k}; only {_EXPECTED_K[kind]} is supported"
            f" for {kind.value}"
        )
    symbol, negated = _machine(lam, eps, kind)
    expect_rank = lam.size() // 2 if kind is not Kind.ORTH_ODD else (lam.size() - 1) // 2
    expect_defect = 0 if kind is Kind.ORTH_EVEN else 1
    if symbol.rank() != expect_rank or symbol.defect() != expect_defect:
        raise InternalCheckError(
            f"symbol for {lam} ({kind.value}) has rank {symbol.rank()},"
            f" defect {symbol.defect()}"
        )
    return SpringerDatum(symbol, k, lam, eps, kind, negated)


def _ones(lam: Partition, kind: Kind) -> SignVector:
    return SignVector.ones(jord_bp(lam, kind), kind.orthogonal)


def partition_of_special_symbol(sym: Symbol, kind: Kind) -> Partition:
    """Inverse of the all-ones symbol map, defined on special symbols."""
    from .symbols import is_special_symbol

    if not is_special_symbol(sym):
        raise NotSpecialError(f"{sym} is not special")
    n = sym.rank()

    def rebuild(zp: tuple[int, ...], ze: tuple[int, ...], stair_top: int) -> Partition | None:
        seq = sorted([2 * z + 1 for z in zp] + [2 * z for z in ze], reverse=True)
        parts = [seq[i] - (stair_top - i) for i in range(len(seq))]
        if any(p < 0 for p in parts) or any(
            parts[i] < parts[i + 1] for i in range(len(parts) - 1)
        ):
            return None
        return Partition(tuple(parts))

    if kind in (Kind.SYMPLECTIC, Kind.ORTH_ODD):
        s = sym.aligned(2 * n + 1)
        if len(s.X) < len(s.Y):
            s = s.swap()
        if kind is Kind.SYMPLECTIC:
            lam = rebuild(s.X, tuple(y + 1 for y in s.Y), 2 * n + 1)
        else:
            lam = rebuild(s.X, s.Y, 2 * n)
        if lam is None or not is_special(lam, kind):
            raise InternalCheckError(f"cannot invert special symbol {sym} ({kind.value})")
        return lam

    if n == 0:
        return Partition(())
    s = sym.aligned(2 * n)
    candidates = set()
    for ze, zp in ((s.X, s.Y), (s.Y, s.X)):
        lam = rebuild(zp, ze, 2 * len(s.X) - 1)
        if lam is not None and is_special(lam, Kind.ORTH_EVEN) and lam.size() == 2 * n:
            candidates.add(lam)
    if len(candidates) != 1:
        raise InternalCheckError(f"cannot invert special symbol {sym} (orth-even)")
    return candidates.pop()


@lru_cache(maxsize=None)
def special_closure(lam: Partition, kind: Kind) -> Partition:
    """Smallest special class member above lam (family route)."""
    if is_special(lam, kind):
        return lam
    datum = springer_symbol(lam, _ones(lam, kind), kind)
    return partition_of_special_symbol(special_member(datum.symbol), kind)


def special_closure_bruteforce(lam: Partition, kind: Kind) -> Partition:
    """Oracle: minimum special class member >= lam under dominance."""
    if not is_member(lam, kind):
        raise ClassMismatchError(f"{lam} is not in class {kind.value}")
    above = [mu for mu in enumerate_class(lam.size(), kind, True) if lam.leq(mu)]
    result = [mu for mu in above if all(mu.leq(other) for other in above)]
    if len(result) != 1:
        raise InternalCheckError(f"no unique special cover for {lam} ({kind.value})")
    return result[0]


def special_closure_pair(lam: Partition, eps: SignVector, kind: Kind) -> Partition:
    """Special partition whose symbol family contains the symbol of (lam, eps)."""
    datum = springer_symbol(lam, eps, kind)
    return partition_of_special_symbol(special_member(datum.symbol), kind)


def admissible_sign_vectors(lam: Partition, kind: Kind) -> tuple[SignVector, ...]:
    """Sign vectors constant on every interval, with the smallest-interval clause."""
    struct = intervals(lam, kind)
    choices: list[tuple[int, ...]] = []
    forced: list[int] = []
    for iv in struct:
        vals = tuple(v for v in iv.values if v != 0)
        if not vals:
            continue
        if kind is Kind.SYMPLECTIC and iv is struct.delta_min() and iv.values != (0,):
            forced.extend(vals)
        else:
            choices.append(vals)
    out: list[SignVector] = []
    seen: set[tuple] = set()
    for bits in range(1 << len(choices)):
        mapping = {v: 1 for v in forced}
        for idx, vals in enumerate(choices):
            s = -1 if bits & (1 << idx) else 1
            for v in vals:
                mapping[v] = s
        vec = SignVector.make(mapping, kind.orthogonal)
        if vec.items not in seen:
            seen.add(vec.items)
            out.append(vec)
    return tuple(out)


@dataclass(frozen=True)
class FamilyCoords:
    """Z/2-labels per interval, aligned to the decreasing interval order."""

    taus: tuple[int, ...]
    deltas: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.taus) != len(self.deltas):
            raise DomainError("taus and deltas must have equal length")
        if any(t not in (0, 1) for t in self.taus + self.deltas):
            raise DomainError("coords must be 0/1")

    @classmethod
    def zeros(cls, count: int) -> "FamilyCoords":
        return cls((0,) * count, (0,) * count)


def _interval_sign(eps: SignVector, iv_values: tuple[int, ...]) -> int:
    vals = [v for v in iv_values if v != 0]
    signs = {eps.value(v) for v in vals}
    if len(signs) > 1:
        raise HypothesisError(f"sign vector not constant on interval {iv_values}")
    return signs.pop() if signs else 1


def family_coords(lam: Partition, eps: SignVector, kind: Kind) -> FamilyCoords:
    """tau is 1 exactly on intervals where eps is -1; delta vanishes."""
    struct = intervals(lam, kind)
    per = [_interval_sign(eps, iv.values) for iv in struct]
    if kind is Kind.SYMPLECTIC:
        if struct.delta_min().values != (0,) and per[-1] == -1:
            raise HypothesisError(
                f"eps must be +1 on the smallest interval of {lam} ({kind.value})"
            )
        if struct.delta_min().values == (0,):
            per[-1] = 1
    else:
        if per and per[0] == -1:  # normalize the diagonal lift on the largest interval
            per = [-s for s in per]
    taus = tuple(0 if s == 1 else 1 for s in per)
    return FamilyCoords(taus, (0,) * len(taus))


def signs_from_coords(lam: Partition, coords: FamilyCoords, kind: Kind) -> SignVector:
    """Inverse of family_coords on admissible data."""
    struct = intervals(lam, kind)
    if len(coords.taus) != len(struct):
        raise DomainError(
            f"expected {len(struct)} coords for {lam} ({kind.value}),"
            f" got {len(coords.taus)}"
        )
    if any(d != 0 for d in coords.deltas):
        raise DomainError("only delta = 0 coords parametrize sign vectors")
    taus = list(coords.taus)
    if kind is Kind.SYMPLECTIC:
        if taus and taus[-1] != 0:
            raise DomainError("smallest-interval tau must vanish (symplectic)")
    else:
        if taus and taus[0] != 0:
            taus = [(t + taus[0]) % 2 for t in taus]
    mapping: dict[int, int] = {}
    for iv, t in zip(struct, taus):
        for v in iv.values:
            if v != 0:
                mapping[v] = -1 if t else 1
    return SignVector.make(mapping, kind.orthogonal)

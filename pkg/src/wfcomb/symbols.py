"""Symbols: pairs of finite sets of naturals up to shift/swap equivalence.

A symbol stores one representative (two strictly decreasing tuples).
Equality and hashing go through the canonical representative, so distinct
representatives of one equivalence class compare equal.  Families group
symbols sharing union and intersection once representatives are aligned;
each family of defect <= 1 symbols contains exactly one special member.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .errors import DomainError, InternalCheckError, UnsupportedDefectError
from .partitions import Partition

__all__ = [
    "Symbol",
    "Bipartition",
    "FamilyKey",
    "symbol_from_bipartition",
    "bipartition_of",
    "is_special_symbol",
    "family_key",
    "same_family",
    "family_members",
    "special_member",
    "dual_symbol",
    "special_symbols",
]


def _row(entries) -> tuple[int, ...]:
    row = tuple(sorted((int(x) for x in entries), reverse=True))
    if any(x < 0 for x in row):
        raise DomainError(f"symbol entries must be naturals: {row!r}")
    if len(set(row)) != len(row):
        raise DomainError(f"symbol row has repeated entries: {row!r}")
    return row


@dataclass(frozen=True, eq=False)
class Symbol:
    X: tuple[int, ...]
    Y: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "X", _row(self.X))
        object.__setattr__(self, "Y", _row(self.Y))

    # -- invariants ------------------------------------------------------------

    def rank(self) -> int:
        c = len(self.X) + len(self.Y)
        r = sum(self.X) + sum(self.Y) - ((c - 1) ** 2) // 4
        if r < 0:
            raise DomainError(f"rows {self.X}/{self.Y} have negative rank")
        return r

    def defect(self) -> int:
        return abs(len(self.X) - len(self.Y))

    # -- equivalence -----------------------------------------------------------

    def shift(self, t: int = 1) -> "Symbol":
        """Representative with t extra simultaneous up-shifts."""
        if t < 0:
            raise DomainError("shift amount must be >= 0")
        X, Y = self.X, self.Y
        for _ in range(t):
            X = tuple(x + 1 for x in X) + (0,)
            Y = tuple(y + 1 for y in Y) + (0,)
        return Symbol(X, Y)

    def swap(self) -> "Symbol":
        return Symbol(self.Y, self.X)

    def normalize(self) -> "Symbol":
        """Minimal representative, orientation |X| >= |Y| with lex tie-break."""
        X, Y = self.X, self.Y
        while X and Y and X[-1] == 0 and Y[-1] == 0:
            X = tuple(x - 1 for x in X[:-1])
            Y = tuple(y - 1 for y in Y[:-1])
        if len(X) < len(Y) or (len(X) == len(Y) and X < Y):
            X, Y = Y, X
        return Symbol(X, Y)

    def _key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = self.normalize()
        return (n.X, n.Y)

    def __eq__(self, other) -> bool:
        return isinstance(other, Symbol) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    # -- alignment -------------------------------------------------------------

    def aligned(self, total: int) -> "Symbol":
        """Representative with |X|+|Y| == total (same defect parity required)."""
        base = self.normalize()
        c = len(base.X) + len(base.Y)
        if total < c or (total - c) % 2:
            raise DomainError(f"cannot align {c} entries to {total}")
        return base.shift((total - c) // 2)

    # -- I/O ---------------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Symbol":
        """Parse the text form "X=5,2,0;Y=3,0" (empty row: "X=;Y=0")."""
        try:
            xpart, ypart = text.split(";")
            xs = xpart.split("=", 1)[1].strip()
            ys = ypart.split("=", 1)[1].strip()
        except (ValueError, IndexError) as exc:
            raise DomainError(f"malformed symbol text {text!r}") from exc
        X = tuple(int(t) for t in xs.split(",")) if xs else ()
        Y = tuple(int(t) for t in ys.split(",")) if ys else ()
        return cls(X, Y)

    def to_text(self) -> str:
        return "X={};Y={}".format(
            ",".join(str(x) for x in self.X), ",".join(str(y) for y in self.Y)
        )

    def to_json(self) -> dict:
        return {
            "X": list(self.X),
            "Y": list(self.Y),
            "rank": self.rank(),
            "defect": self.defect(),
        }

    def __str__(self) -> str:
        return f"({{{','.join(map(str, self.X))}}},{{{','.join(map(str, self.Y))}}})"


@dataclass(frozen=True)
class Bipartition:
    """Ordered pair of partitions labelling a hyperoctahedral character."""

    alpha: Partition
    beta: Partition

    def total(self) -> int:
        return self.alpha.size() + self.beta.size()

    def unordered(self) -> "Bipartition":
        a, b = self.alpha, self.beta
        return Bipartition(a, b) if a.parts >= b.parts else Bipartition(b, a)


def _staircase(top: int) -> tuple[int, ...]:
    """(top, top-1, ..., 0); empty when top < 0."""
    return tuple(range(top, -1, -1))


def symbol_from_bipartition(bp: Bipartition, defect: int = 1) -> Symbol:
    """Defect-1 or defect-0 symbol attached to a bipartition.

    Defect 1: X = alpha + {r,...,0}, Y = beta + {r-1,...,0}; defect 0 uses
    the staircase {r-1,...,0} on both rows.  The class is independent of
    the padding size r.
    """
    if defect not in (0, 1):
        raise UnsupportedDefectError(f"defect must be 0 or 1, got {defect}")
    a, b = bp.alpha, bp.beta
    r = max(a.length(), b.length(), 1 if defect == 1 else 0)
    if defect == 1:
        X = tuple(a.part(j) + (r - j + 1) for j in range(1, r + 2))
        Y = tuple(b.part(j) + (r - j) for j in range(1, r + 1))
    else:
        X = tuple(a.part(j) + (r - j) for j in range(1, r + 1))
        Y = tuple(b.part(j) + (r - j) for j in range(1, r + 1))
    return Symbol(X, Y)


def bipartition_of(sym: Symbol) -> Bipartition:
    """Recover (alpha, beta) from a defect-0/1 symbol (unordered for defect 0)."""
    d = sym.defect()
    if d not in (0, 1):
        raise UnsupportedDefectError(f"defect {d} symbols carry no bipartition here")
    s = sym.normalize()
    X, Y = s.X, s.Y
    alpha = Partition(tuple(X[i] - (len(X) - 1 - i) for i in range(len(X))))
    beta = Partition(tuple(Y[i] - (len(Y) - 1 - i) for i in range(len(Y))))
    bp = Bipartition(alpha, beta)
    return bp.unordered() if d == 0 else bp


def is_special_symbol(sym: Symbol) -> bool:
    """Interleaving test x1 >= y1 >= x2 >= ... on a defect-0/1 representative."""
    d = sym.defect()
    if d not in (0, 1):
        raise UnsupportedDefectError(f"specialness undefined for defect {d}")

    def interleaves(X: tuple[int, ...], Y: tuple[int, ...]) -> bool:
        merged: list[int] = []
        for i in range(len(X)):
            merged.append(X[i])
            if i < len(Y):
                merged.append(Y[i])
        return all(merged[i] >= merged[i + 1] for i in range(len(merged) - 1))

    s = sym.normalize()
    if d == 1:
        return interleaves(s.X, s.Y)
    return interleaves(s.X, s.Y) or interleaves(s.Y, s.X)


@dataclass(frozen=True)
class FamilyKey:
    """Canonical (union multiset, intersection set) of an aligned representative."""

    union: tuple[int, ...]
    intersection: tuple[int, ...]


def family_key(sym: Symbol) -> FamilyKey:
    s = sym.normalize()
    u = set(s.X) | set(s.Y)
    i = set(s.X) & set(s.Y)
    # Down-shift the pair itself while 0 sits in the intersection, so that
    # members whose minimal representatives have different sizes share a key.
    while 0 in i:
        u = {v - 1 for v in u if v > 0}
        i = {v - 1 for v in i if v > 0}
    return FamilyKey(tuple(sorted(u, reverse=True)), tuple(sorted(i, reverse=True)))


def same_family(a: Symbol, b: Symbol) -> bool:
    return family_key(a) == family_key(b)


def family_members(sym: Symbol) -> tuple[Symbol, ...]:
    """All symbols sharing the family of sym (every defect of the same parity)."""
    s = sym.normalize()
    inter = sorted(set(s.X) & set(s.Y), reverse=True)
    singular = sorted((set(s.X) | set(s.Y)) - set(inter), reverse=True)
    members: set[Symbol] = set()
    for size in range(len(singular) + 1):
        for chosen in itertools.combinations(singular, size):
            rest = tuple(v for v in singular if v not in chosen)
            members.add(Symbol(chosen + tuple(inter), rest + tuple(inter)))
    return tuple(sorted(members, key=lambda m: (m.defect(), m._key())))


def special_member(sym: Symbol) -> Symbol:
    """The unique special symbol in the family of sym."""
    found = [
        m for m in family_members(sym) if m.defect() <= 1 and is_special_symbol(m)
    ]
    if len(found) != 1:
        raise InternalCheckError(
            f"family of {sym} has {len(found)} special members, expected 1"
        )
    return found[0]


def dual_symbol(sym: Symbol) -> Symbol:
    """Complement-based duality; involutive, preserves rank, defect and families."""
    d = max((*sym.X, *sym.Y), default=0)
    full = set(range(d + 1))
    X = full - {d - y for y in sym.Y}
    Y = full - {d - x for x in sym.X}
    return Symbol(tuple(sorted(X, reverse=True)), tuple(sorted(Y, reverse=True)))


@lru_cache(maxsize=None)
def special_symbols(rank: int, defect: int) -> tuple[Symbol, ...]:
    """Direct enumeration of special symbols of the given rank and defect.

    Generates the interleaved sequences x1 >= y1 >= x2 >= ... with strictly
    decreasing rows, independent of any parameter map, for use as a counting
    oracle.
    """
    if defect not in (0, 1):
        raise UnsupportedDefectError(f"defect must be 0 or 1, got {defect}")
    out: set[Symbol] = set()

    def place(
        kx: int, ky: int, prev: int, rest: int, xs: tuple[int, ...], ys: tuple[int, ...]
    ) -> Iterator[tuple[tuple[int, ...], tuple[int, ...]]]:
        if kx == 0 and ky == 0:
            if rest == 0:
                yield xs, ys
            return
        to_x = kx > ky if defect == 1 else kx >= ky
        row = xs if to_x else ys
        k_after_x = kx - 1 if to_x else kx
        k_after_y = ky if to_x else ky - 1
        suffix_min = k_after_x * (k_after_x - 1) // 2 + k_after_y * (k_after_y - 1) // 2
        hi = min(prev, rest - suffix_min)
        if row:
            hi = min(hi, row[-1] - 1)
        lo = max(k_after_x if to_x else 0, k_after_y if not to_x else 0)
        for v in range(hi, lo - 1, -1):
            yield from place(
                k_after_x,
                k_after_y,
                v,
                rest - v,
                xs + (v,) if to_x else xs,
                ys if to_x else ys + (v,),
            )

    for s in range(0, rank + 2):
        nx, ny = (s + 1, s) if defect == 1 else (s, s)
        if nx == 0 and ny == 0:
            if rank == 0:
                out.add(Symbol((), ()))
            continue
        total = rank + ((nx + ny - 1) ** 2) // 4
        for xs, ys in place(nx, ny, total, total, (), ()):
            if xs and ys and xs[-1] == 0 and ys[-1] == 0:
                continue  # a shift of a smaller representative
            sym = Symbol(xs, ys)
            if sym.rank() == rank and is_special_symbol(sym):
                out.add(sym)
    return tuple(sorted(out, key=lambda m: m._key()))

"""Symplectic/orthogonal partition classes, interval decompositions, sign vectors.

Three kinds are handled: symplectic partitions of even size, orthogonal
partitions of odd size, orthogonal partitions of even size.  Special
members of each class carry an ordered interval decomposition whose entry
and exit row indices drive every duality and induction computation here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import ClassMismatchError, DomainError, InternalCheckError, NotSpecialError
from .partitions import Partition, partitions_of

__all__ = [
    "INF",
    "Kind",
    "classify",
    "is_member",
    "is_special",
    "is_exceptional",
    "jord_bp",
    "Interval",
    "IntervalStructure",
    "intervals",
    "step_sequence",
    "SignVector",
    "sign_vectors",
    "enumerate_class",
]

INF = math.inf


class Kind(str, Enum):
    SYMPLECTIC = "symp"
    ORTH_ODD = "orth-odd"
    ORTH_EVEN = "orth-even"

    @classmethod
    def parse(cls, text: str) -> "Kind":
        for k in cls:
            if k.value == text:
                return k
        raise DomainError(f"unknown kind {text!r} (expected symp|orth-odd|orth-even)")

    @property
    def orthogonal(self) -> bool:
        return self is not Kind.SYMPLECTIC


def is_member(lam: Partition, kind: Kind) -> bool:
    """Class membership: odd (resp. even) part values must have even multiplicity."""
    if kind is Kind.SYMPLECTIC:
        if lam.size() % 2:
            return False
        return all(lam.mult(v) % 2 == 0 for v in lam.values() if v % 2 == 1)
    if kind is Kind.ORTH_ODD and lam.size() % 2 == 0:
        return False
    if kind is Kind.ORTH_EVEN and lam.size() % 2:
        return False
    return all(lam.mult(v) % 2 == 0 for v in lam.values() if v % 2 == 0)


def is_special(lam: Partition, kind: Kind) -> bool:
    """Specialness via the rowwise parity pairing of each class."""
    if not is_member(lam, kind):
        return False
    n = lam.length() + 2
    if kind is Kind.ORTH_ODD:
        if lam.part(1) % 2 == 0:
            return False
        return all(lam.part(2 * j) % 2 == lam.part(2 * j + 1) % 2 for j in range(1, n))
    return all(lam.part(2 * j - 1) % 2 == lam.part(2 * j) % 2 for j in range(1, n))


def is_exceptional(lam: Partition) -> bool:
    """Even-orthogonal partition with no odd parts at all."""
    if not is_member(lam, Kind.ORTH_EVEN):
        raise ClassMismatchError(f"{lam} is not an even orthogonal partition")
    return not jord_bp(lam, Kind.ORTH_EVEN)


def classify(lam: Partition) -> dict:
    """Membership and specialness flags for every kind that fits the size."""
    out: dict[str, bool] = {}
    for kind in Kind:
        out[kind.value] = is_member(lam, kind)
        out[kind.value + "-special"] = is_special(lam, kind)
    return out


def jord_bp(lam: Partition, kind: Kind) -> tuple[int, ...]:
    """Distinguished part values: even parts >= 2 (symplectic) or odd parts."""
    if not is_member(lam, kind):
        raise ClassMismatchError(f"{lam} is not in class {kind.value}")
    if kind is Kind.SYMPLECTIC:
        return tuple(v for v in lam.values() if v % 2 == 0 and v >= 2)
    return tuple(v for v in lam.values() if v % 2 == 1)


@dataclass(frozen=True)
class Interval:
    """One block of the decomposition, with its row-index span."""

    values: tuple[int, ...]  # decreasing
    j_min: int | None  # None: undefined (largest odd-orthogonal interval)
    j_max: int | float  # math.inf for the smallest symplectic interval

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "j_min": self.j_min,
            "j_max": "inf" if self.j_max == INF else self.j_max,
        }


@dataclass(frozen=True)
class IntervalStructure:
    lam: Partition
    kind: Kind
    intervals: tuple[Interval, ...]  # decreasing

    def __len__(self) -> int:
        return len(self.intervals)

    def __iter__(self):
        return iter(self.intervals)

    def delta_min(self) -> Interval:
        return self.intervals[-1]

    def delta_max(self) -> Interval:
        return self.intervals[0]

    def containing(self, value: int) -> Interval:
        for iv in self.intervals:
            if value in iv.values:
                return iv
        raise DomainError(f"value {value} lies in no interval of {self.lam}")

    def j_min_set(self) -> frozenset:
        return frozenset(iv.j_min for iv in self.intervals if iv.j_min is not None)

    def j_max_set(self) -> frozenset:
        return frozenset(iv.j_max for iv in self.intervals)

    def to_json(self) -> list[dict]:
        return [iv.to_json() for iv in self.intervals]


def _odd_mult_markers(lam: Partition, kind: Kind) -> list[int]:
    parity = 0 if kind is Kind.SYMPLECTIC else 1
    return [v for v in lam.values() if v % 2 == parity and lam.mult(v) % 2 == 1]


def _span(lam: Partition, values: tuple[int, ...]) -> tuple[int, int | float]:
    """(smallest, largest) row index j with lam_j in values; inf when 0 in values."""
    rows = [j for j in range(1, lam.length() + 1) if lam.part(j) in values]
    if 0 in values:
        j_min = min(rows) if rows else lam.length() + 1
        return j_min, INF
    if not rows:
        raise InternalCheckError(f"interval {values} meets no row of {lam}")
    return min(rows), max(rows)


@lru_cache(maxsize=None)
def intervals(lam: Partition, kind: Kind) -> IntervalStructure:
    """Ordered interval decomposition of a special partition."""
    if not is_special(lam, kind):
        raise NotSpecialError(f"{lam} is not special in class {kind.value}")
    markers = _odd_mult_markers(lam, kind)

    if kind is Kind.SYMPLECTIC:
        pool = list(jord_bp(lam, kind)) + [0]
        if len(markers) % 2:
            markers = markers + [0]
        ranges = [(markers[2 * h + 1], markers[2 * h]) for h in range(len(markers) // 2)]
        allow_zero = True
    elif kind is Kind.ORTH_ODD:
        pool = list(jord_bp(lam, kind))
        if len(markers) % 2 == 0:
            raise InternalCheckError(f"odd case needs an odd marker count: {lam}")
        bounds = [INF] + markers
        ranges = [(bounds[2 * h + 1], bounds[2 * h]) for h in range((len(markers) + 1) // 2)]
        allow_zero = False
    else:
        pool = list(jord_bp(lam, kind))
        if len(markers) % 2:
            raise InternalCheckError(f"even case needs an even marker count: {lam}")
        ranges = [(markers[2 * h + 1], markers[2 * h]) for h in range(len(markers) // 2)]
        allow_zero = False

    # Values the definition may sweep up: every part value, plus 0 when allowed.
    sweep = list(lam.values()) + ([0] if allow_zero else [])
    used: set[int] = set()
    blocks: list[tuple[int, ...]] = []
    for lo, hi in ranges:
        vals = tuple(v for v in sweep if lo <= v <= hi)
        if kind is Kind.SYMPLECTIC and any(v % 2 for v in vals):
            raise InternalCheckError(f"odd value swept into a symplectic interval: {lam}")
        if kind is not Kind.SYMPLECTIC and any(v % 2 == 0 for v in vals):
            raise InternalCheckError(f"even value swept into an orthogonal interval: {lam}")
        blocks.append(vals)
        used.update(vals)
    for v in pool:
        if v not in used:
            blocks.append((v,))
    blocks.sort(key=lambda b: -max(b))

    if sorted(v for b in blocks for v in b) != sorted(pool):
        raise InternalCheckError(f"interval decomposition does not tile {pool} for {lam}")

    ivs: list[Interval] = []
    for idx, vals in enumerate(blocks):
        j_min, j_max = _span(lam, vals)
        if kind is Kind.ORTH_ODD and idx == 0:
            ivs.append(Interval(vals, None, j_max))
            continue
        ivs.append(Interval(vals, j_min, j_max))

    for iv in ivs:
        if kind is Kind.SYMPLECTIC:
            if iv.j_min is not None and iv.j_min % 2 == 0:
                raise InternalCheckError(f"even j_min in symplectic {lam}")
            if iv.j_max != INF and iv.j_max % 2:
                raise InternalCheckError(f"odd finite j_max in symplectic {lam}")
        elif kind is Kind.ORTH_ODD:
            if iv.j_min is not None and iv.j_min % 2:
                raise InternalCheckError(f"odd j_min in odd orthogonal {lam}")
            if iv.j_max == INF or iv.j_max % 2 == 0:
                raise InternalCheckError(f"bad j_max in odd orthogonal {lam}")
        else:
            if iv.j_min is None or iv.j_min % 2 == 0:
                raise InternalCheckError(f"bad j_min in even orthogonal {lam}")
            if iv.j_max == INF or iv.j_max % 2:
                raise InternalCheckError(f"bad j_max in even orthogonal {lam}")

    return IntervalStructure(lam, kind, tuple(ivs))


def step_sequence(lam: Partition, kind: Kind) -> tuple[int, ...]:
    """+1 at each interval entry index, -1 at each exit index, length l+1."""
    struct = intervals(lam, kind)
    length = lam.length() + 1
    steps = [0] * length
    for iv in struct:
        if iv.j_min is not None and iv.j_min <= length:
            if steps[iv.j_min - 1]:
                raise InternalCheckError(f"colliding step marks for {lam}")
            steps[iv.j_min - 1] = 1
        if iv.j_max != INF and iv.j_max <= length:
            if steps[int(iv.j_max) - 1]:
                raise InternalCheckError(f"colliding step marks for {lam}")
            steps[int(iv.j_max) - 1] = -1
    return tuple(steps)


@dataclass(frozen=True)
class SignVector:
    """Map from the distinguished part values to {+1,-1}.

    With diagonal_quotient set, the vector stands for its class modulo the
    global sign flip; the stored representative is the lift whose value on
    the largest key is +1.
    """

    items: tuple[tuple[int, int], ...]  # ((value, sign), ...) decreasing by value
    diagonal_quotient: bool = False

    def __post_init__(self) -> None:
        items = tuple(sorted(((int(i), int(s)) for i, s in self.items), reverse=True))
        if any(s not in (1, -1) for _, s in items):
            raise DomainError(f"signs must be +-1: {items!r}")
        if len({i for i, _ in items}) != len(items):
            raise DomainError(f"repeated keys: {items!r}")
        if self.diagonal_quotient and items and items[0][1] == -1:
            items = tuple((i, -s) for i, s in items)
        object.__setattr__(self, "items", items)

    @classmethod
    def make(cls, mapping: Mapping[int, int], diagonal_quotient: bool = False) -> "SignVector":
        return cls(tuple(mapping.items()), diagonal_quotient)

    @classmethod
    def ones(cls, keys: Iterable[int], diagonal_quotient: bool = False) -> "SignVector":
        return cls(tuple((k, 1) for k in keys), diagonal_quotient)

    @classmethod
    def parse(cls, text: str, diagonal_quotient: bool = False) -> "SignVector":
        """Parse "3=1,1=-1"; empty text gives the empty vector."""
        text = text.strip()
        if not text:
            return cls((), diagonal_quotient)
        pairs = []
        for chunk in text.split(","):
            key, _, val = chunk.partition("=")
            pairs.append((int(key), int(val)))
        return cls(tuple(pairs), diagonal_quotient)

    def keys(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.items)

    def value(self, i: int) -> int:
        for k, s in self.items:
            if k == i:
                return s
        raise DomainError(f"sign vector has no key {i}")

    def as_dict(self) -> dict[int, int]:
        return dict(self.items)

    def negate(self) -> "SignVector":
        return SignVector(tuple((i, -s) for i, s in self.items), self.diagonal_quotient)

    def is_ones(self) -> bool:
        return all(s == 1 for _, s in self.items)

    def to_json(self) -> dict[str, int]:
        return {str(i): s for i, s in self.items}


def sign_vectors(lam: Partition, kind: Kind) -> tuple[SignVector, ...]:
    """Every sign vector on jord_bp(lam); orthogonal kinds modulo the diagonal."""
    keys = jord_bp(lam, kind)
    quotient = kind.orthogonal
    out: list[SignVector] = []
    seen: set[tuple] = set()
    for bits in range(1 << len(keys)):
        vec = SignVector(
            tuple((k, 1 if bits & (1 << idx) == 0 else -1) for idx, k in enumerate(keys)),
            quotient,
        )
        if vec.items not in seen:
            seen.add(vec.items)
            out.append(vec)
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_class(n: int, kind: Kind, special_only: bool = False) -> tuple[Partition, ...]:
    """All class members (or special members) of total size n."""
    test = is_special if special_only else is_member
    return tuple(p for p in partitions_of(n) if test(p, kind))

"""Levi induction, endoscopic induction, relative intervals, decomposition.

`dominance_floor` is the collapse onto a class: the largest class member
below a given partition.  Levi induction doubles the general-linear
factors and collapses; endoscopic induction adds a +-1 correction sequence
read off the interval entry/exit indices of the two factors.
`decompose_regular` inverts endoscopic induction: given an all-even
symplectic partition and a Z/2-label per repeated part value, it rebuilds
the unique factor pair produced by the descending two-track recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .classical import INF, Interval, Kind, intervals, is_member, is_special, jord_bp
from .errors import ClassMismatchError, DomainError, InternalCheckError
from .partitions import Partition

__all__ = [
    "dominance_floor",
    "dominance_floor_bruteforce",
    "LeviShape",
    "levi_induce",
    "cup",
    "levi_dual",
    "RelativeInterval",
    "EndoData",
    "endoscopic_induce",
    "Decomposition",
    "decompose_regular",
]


def _bad_parity(kind: Kind) -> int:
    """Parity whose part values must occur an even number of times."""
    return 1 if kind is Kind.SYMPLECTIC else 0


@lru_cache(maxsize=None)
def dominance_floor(mu: Partition, kind: Kind) -> Partition:
    """Largest class member <= mu; greedy single-unit repairs."""
    if kind is Kind.SYMPLECTIC and mu.size() % 2:
        raise DomainError(f"no symplectic partition of odd size {mu.size()}")
    if kind is Kind.ORTH_ODD and mu.size() % 2 == 0:
        raise DomainError(f"no odd orthogonal partition of even size {mu.size()}")
    if kind is Kind.ORTH_EVEN and mu.size() % 2:
        raise DomainError(f"no even orthogonal partition of odd size {mu.size()}")
    bad = _bad_parity(kind)
    parts = list(mu.parts)
    while True:
        offenders = [
            v for v in sorted(set(parts), reverse=True)
            if v % 2 == bad and parts.count(v) % 2
        ]
        if not offenders:
            break
        q = offenders[0]
        j = max(i for i, p in enumerate(parts) if p == q)
        parts[j] = q - 1
        k = j + 1
        while k < len(parts) and parts[k] > q - 2:
            k += 1
        if k == len(parts):
            parts.append(1)
        else:
            parts[k] += 1
        parts = [p for p in parts if p > 0]
    out = Partition(tuple(parts))
    if not is_member(out, kind) or not out.leq(mu):
        raise InternalCheckError(f"collapse of {mu} ({kind.value}) failed: {out}")
    return out


def dominance_floor_bruteforce(mu: Partition, kind: Kind) -> Partition:
    """Oracle: maximum over the enumerated class of everything below mu."""
    from .classical import enumerate_class

    below = [nu for nu in enumerate_class(mu.size(), kind) if nu.leq(mu)]
    result = [nu for nu in below if all(other.leq(nu) for other in below)]
    if len(result) != 1:
        raise InternalCheckError(f"no unique class floor for {mu} ({kind.value})")
    return result[0]


@dataclass(frozen=True)
class LeviShape:
    """General-linear block sizes plus the core size."""

    gl_sizes: tuple[int, ...]
    core: int

    def __post_init__(self) -> None:
        if any(s <= 0 for s in self.gl_sizes) or self.core < 0:
            raise DomainError(f"bad shape {self.gl_sizes} core {self.core}")

    def total(self) -> int:
        return sum(self.gl_sizes) + self.core


def _check_shape(shape: LeviShape, parts: tuple[Partition, ...], core_size: int) -> None:
    if len(parts) != len(shape.gl_sizes) + 1:
        raise DomainError(
            f"need {len(shape.gl_sizes)} GL partitions plus a core, got {len(parts)}"
        )
    for lam, sz in zip(parts, shape.gl_sizes):
        if lam.size() != sz:
            raise DomainError(f"GL factor {lam} has size {lam.size()}, expected {sz}")
    if parts[-1].size() != core_size:
        raise DomainError(
            f"core factor {parts[-1]} has size {parts[-1].size()}, expected {core_size}"
        )


def levi_induce(shape: LeviShape, parts: tuple[Partition, ...]) -> Partition:
    """Collapse of (lam1+lam1)+...+(lamt+lamt)+lam0 onto the odd orthogonal class."""
    _check_shape(shape, parts, 2 * shape.core + 1)
    if not is_member(parts[-1], Kind.ORTH_ODD):
        raise ClassMismatchError(f"core {parts[-1]} is not odd orthogonal")
    total = parts[-1]
    for lam in parts[:-1]:
        total = total + lam + lam
    return dominance_floor(total, Kind.ORTH_ODD)


def cup(shape: LeviShape, parts: tuple[Partition, ...]) -> Partition:
    """Doubled multiset union with a symplectic core."""
    _check_shape(shape, parts, 2 * shape.core)
    if not is_member(parts[-1], Kind.SYMPLECTIC):
        raise ClassMismatchError(f"core {parts[-1]} is not symplectic")
    out = parts[-1]
    for lam in parts[:-1]:
        out = out | lam | lam
    return out


def levi_dual(parts: tuple[Partition, ...]) -> tuple[Partition, ...]:
    """Transpose each GL factor, dualize the symplectic core."""
    from .duality import dual_partition

    return tuple(p.transpose() for p in parts[:-1]) + (
        dual_partition(parts[-1], Kind.SYMPLECTIC),
    )


@dataclass(frozen=True)
class RelativeInterval:
    values: tuple[int, ...]  # decreasing
    j_lo: int
    j_hi: int | float  # math.inf allowed

    def singleton(self) -> bool:
        return len(self.values) == 1

    def to_json(self) -> dict:
        return {
            "values": list(self.values),
            "j_min": self.j_lo,
            "j_max": "inf" if self.j_hi == INF else self.j_hi,
        }


@dataclass(frozen=True)
class EndoData:
    lam1: Partition
    lam2: Partition
    j_plus: tuple[int, ...]
    j_minus: tuple[int, ...]
    xi: tuple[int, ...]
    induced: Partition
    relative: tuple[RelativeInterval, ...]
    regular: bool
    tau_rel: tuple[tuple[int, int], ...] | None  # defined only when regular

    def tau_rel_dict(self) -> dict[int, int]:
        if self.tau_rel is None:
            raise DomainError("relative labels only exist for regular induction")
        return dict(self.tau_rel)

    def relative_for_value(self, i: int) -> RelativeInterval:
        for rel in self.relative:
            if i in rel.values:
                return rel
        raise DomainError(f"{i} lies in no relative interval")

    def to_json(self) -> dict:
        return {
            "lambda1": self.lam1.to_text(),
            "lambda2": self.lam2.to_text(),
            "J_plus": list(self.j_plus),
            "J_minus": list(self.j_minus),
            "induced": self.induced.to_text(),
            "relative_intervals": [r.to_json() for r in self.relative],
            "regular": self.regular,
            "tau": None if self.tau_rel is None else {str(i): t for i, t in self.tau_rel},
        }


def _interval_spans(struct) -> list[tuple[int | None, int | float]]:
    return [(iv.j_min, iv.j_max) for iv in struct]


@lru_cache(maxsize=None)
def endoscopic_induce(lam1: Partition, lam2: Partition) -> EndoData:
    """Correction-sequence induction of a special symplectic/even-orthogonal pair."""
    if not is_special(lam1, Kind.SYMPLECTIC):
        raise ClassMismatchError(f"{lam1} is not special symplectic")
    if not is_special(lam2, Kind.ORTH_EVEN):
        raise ClassMismatchError(f"{lam2} is not special even orthogonal")
    s1 = intervals(lam1, Kind.SYMPLECTIC)
    s2 = intervals(lam2, Kind.ORTH_EVEN)
    jmin1 = s1.j_min_set()
    jmin2 = s2.j_min_set()
    jmax1 = s1.j_max_set()
    jmax2 = s2.j_max_set()

    horizon = max(lam1.length(), lam2.length()) + 2
    j_plus = tuple(
        j
        for j in range(1, horizon + 1)
        if lam1.part(j) % 2 == 0
        and lam2.part(j) % 2 == 1
        and (j in jmin1 or j in jmin2)
    )
    j_minus = tuple(
        j
        for j in range(1, horizon + 1)
        if lam1.part(j) % 2 == 0
        and lam2.part(j) % 2 == 1
        and (j in jmax1 or j in jmax2)
    )
    if len(j_plus) != len(j_minus):
        raise InternalCheckError(f"correction index sets unbalanced for {lam1},{lam2}")
    merged = [x for pair in zip(j_plus, j_minus) for x in pair]
    if any(merged[i] >= merged[i + 1] for i in range(len(merged) - 1)):
        raise InternalCheckError(f"correction indices fail to interleave for {lam1},{lam2}")
    if any(j % 2 == 0 for j in j_plus) or any(j % 2 for j in j_minus):
        raise InternalCheckError(f"correction index parities wrong for {lam1},{lam2}")

    length = max(lam1.length(), lam2.length(), max(j_minus, default=0)) + 1
    xi = tuple(
        1 if j in j_plus else (-1 if j in j_minus else 0) for j in range(1, length + 1)
    )
    summed = tuple(lam1.part(j) + lam2.part(j) + xi[j - 1] for j in range(1, length + 1))
    if any(x < 0 for x in summed) or any(
        summed[i] < summed[i + 1] for i in range(len(summed) - 1)
    ):
        raise InternalCheckError(f"induced sequence not a partition for {lam1},{lam2}")
    induced = Partition(summed)
    if not is_member(induced, Kind.SYMPLECTIC):
        raise InternalCheckError(f"induced {induced} is not symplectic")

    # Relative intervals.
    spans = [(iv, 1) for iv in s1] + [(iv, 2) for iv in s2]
    j_all: set[int | float] = set()
    for iv, _ in spans:
        if iv.j_min is not None:
            j_all.add(iv.j_min)
        j_all.add(iv.j_max)
    j_sorted = sorted(j_all, key=lambda v: (v == INF, v))
    jp_rel = jmin1 & jmin2
    jm_rel = jmax1 & jmax2

    def unique_span(j: int, jp: int | float) -> bool:
        hits = [
            (side, iv)
            for iv, side in spans
            if iv.j_min is not None and iv.j_min <= j and jp <= iv.j_max
        ]
        return len(hits) == 1

    index_intervals: list[tuple[int, int | float]] = []
    for j in sorted(jp_rel | jm_rel):
        index_intervals.append((j, j))
    for a, b in zip(j_sorted, j_sorted[1:]):
        if unique_span(a, b):
            index_intervals.append((a, b))

    l_ind = induced.length()
    rels: list[RelativeInterval] = []
    for j, jp in index_intervals:
        top = l_ind + 1 if jp == INF else int(jp)
        vals = sorted({induced.part(t) for t in range(j, top + 1)}, reverse=True)
        rels.append(RelativeInterval(tuple(vals), j, jp))
    rels.sort(key=lambda r: -max(r.values))

    covered = sorted(v for rel in rels for v in rel.values)
    expected = sorted(set(jord_bp(induced, Kind.SYMPLECTIC)) | {0})
    if covered != expected:
        raise InternalCheckError(
            f"relative intervals {covered} do not tile {expected} for {lam1},{lam2}"
        )

    regular = all(rel.singleton() for rel in rels)
    tau_rel: tuple[tuple[int, int], ...] | None = None
    if regular:
        labels: list[tuple[int, int]] = []
        for i in jord_bp(induced, Kind.SYMPLECTIC):
            rel = next(r for r in rels if r.values == (i,))
            if induced.mult(i) == 1:
                if rel.j_lo != rel.j_hi:
                    raise InternalCheckError(f"multiplicity-1 value {i} spans {rel}")
                labels.append((i, 0))
                continue
            owners = [
                side
                for iv, side in spans
                if iv.j_min is not None and iv.j_min <= rel.j_lo and rel.j_hi <= iv.j_max
            ]
            if len(owners) != 1:
                raise InternalCheckError(
                    f"value {i} has {len(owners)} owning intervals for {lam1},{lam2}"
                )
            labels.append((i, (owners[0] + 1) % 2))
        tau_rel = tuple(labels)

    return EndoData(
        lam1, lam2, j_plus, j_minus, xi, induced, tuple(rels), regular, tau_rel
    )


@dataclass(frozen=True)
class Decomposition:
    n1: int
    n2: int
    lam1: Partition
    lam2: Partition
    data: EndoData

    def to_json(self) -> dict:
        from .duality import dual_partition

        dual_union = dual_partition(self.lam1, Kind.SYMPLECTIC).union(
            dual_partition(self.lam2, Kind.ORTH_EVEN)
        )
        dual = dual_partition(self.data.induced, Kind.SYMPLECTIC)
        return {
            "n1": self.n1,
            "n2": self.n2,
            "lambda1": self.lam1.to_text(),
            "lambda2": self.lam2.to_text(),
            "dual_union": dual_union.to_text(),
            "tau": {str(i): t for i, t in (self.data.tau_rel or ())},
            "checks": {
                "regular": self.data.regular,
                "dual_union": dual_union == dual,
                "tau_match": True,  # enforced during construction
            },
        }


def decompose_regular(lam: Partition, tau: Mapping[int, int]) -> Decomposition:
    """Rebuild the factor pair of an all-even symplectic partition.

    tau labels every repeated distinguished part value with 0 (symplectic
    track) or 1 (orthogonal track); multiplicity-one values must carry 0.
    The descending recursion is deterministic, and the result is checked to
    induce lam regularly with the requested labels.
    """
    if not is_member(lam, Kind.SYMPLECTIC) or any(p % 2 for p in lam.parts):
        raise ClassMismatchError(f"{lam} is not an all-even symplectic partition")
    values = jord_bp(lam, Kind.SYMPLECTIC)
    tau = {int(k): int(v) % 2 for k, v in tau.items()}
    if set(tau) != set(values):
        raise DomainError(f"labels must cover {values}, got {sorted(tau)}")
    for i in values:
        if lam.mult(i) == 1 and tau[i] != 0:
            raise DomainError(f"value {i} has multiplicity 1 and needs label 0")
    tau0 = dict(tau)
    tau0[0] = 0

    l = lam.length()
    top = l + 2

    def linked(d: int, j: int) -> bool:
        a, b = lam.part(j), lam.part(j + 1)
        if a == b and tau0[a] == (d + 1) % 2:
            return True
        return j % 2 == 1 and a > b

    # Equivalence classes of consecutive linked indices, per track.
    runs: dict[int, list[tuple[int, int | float]]] = {1: [], 2: []}
    for d in (1, 2):
        start = None
        for j in range(1, top + 1):
            if linked(d, j):
                if start is None:
                    start = j
            else:
                if start is not None:
                    runs[d].append((start, j))
                    start = None
        if start is not None:
            runs[d].append((start, INF))
    # Indices j >= l+1 are linked on track 1 (zero tail), so track 1 always
    # ends with the infinite class.
    if not runs[1] or runs[1][-1][1] != INF:
        raise InternalCheckError(f"missing infinite class for {lam}")
    if any(hi == INF for _, hi in runs[2]):
        raise InternalCheckError(f"unexpected infinite class on track 2 for {lam}")

    def p(d: int, j: int) -> int:
        return 1 if any(lo <= j <= hi for lo, hi in runs[d]) else 0

    def is_run_max(d: int, j: int) -> bool:
        return any(hi == j for _, hi in runs[d])

    jp = {j for j in range(1, top + 1) if j % 2 == 1 and lam.part(j) > lam.part(j + 1)}
    jm = {j for j in range(2, top + 1) if j % 2 == 0 and lam.part(j - 1) > lam.part(j)}

    def x(j: int) -> int:
        return 1 if j in jp else (-1 if j in jm else 0)

    rows1 = {j: 0 for j in range(l + 2, top + 2)}
    rows2 = {j: 0 for j in range(l + 2, top + 2)}
    for j in range(l + 1, 0, -1):
        rhs = lam.part(j) - lam.part(j + 1) + x(j + 1) - x(j)

        def case(d: int) -> str:
            if j % 2 == 0:
                if p(d, j) == 1:
                    return "b" if is_run_max(d, j) else "a"
                return "c"
            return "a" if p(d, j) == 0 else "c"

        c1, c2 = case(1), case(2)
        if c1 == "a" and c2 == "a":
            raise InternalCheckError(f"both tracks idle at row {j} of {lam}")

        def parity(d: int) -> int:
            return (p(d, j) + p(d, j + 1)) % 2

        if c1 == "a":
            e1 = 0
            e2 = rhs
        elif c2 == "a":
            e2 = 0
            e1 = rhs
        elif c1 == "b":
            e1 = 1 if parity(1) else 2
            e2 = rhs - e1
        elif c2 == "b":
            e2 = 1 if parity(2) else 2
            e1 = rhs - e2
        else:
            e1 = 0
            e2 = rhs

        for d, e, c in ((1, e1, c1), (2, e2, c2)):
            if e < 0 or e % 2 != parity(d):
                raise InternalCheckError(
                    f"row increment {e} invalid at j={j}, track {d}, {lam}"
                )
            if c == "a" and e != 0:
                raise InternalCheckError(f"idle track moved at j={j} of {lam}")
            if c == "b" and e <= 0:
                raise InternalCheckError(f"closing track stuck at j={j} of {lam}")
        rows1[j] = rows1[j + 1] + e1
        rows2[j] = rows2[j + 1] + e2

    lam1 = Partition(tuple(rows1[j] for j in range(1, top + 1)))
    lam2 = Partition(tuple(rows2[j] for j in range(1, top + 1)))
    if not is_special(lam1, Kind.SYMPLECTIC) or not is_special(lam2, Kind.ORTH_EVEN):
        raise InternalCheckError(f"decomposition of {lam} left its classes: {lam1}, {lam2}")

    data = endoscopic_induce(lam1, lam2)
    if data.induced != lam or not data.regular:
        raise InternalCheckError(f"decomposition of {lam} fails to induce it back")
    if data.tau_rel_dict() != tau:
        raise InternalCheckError(f"decomposition of {lam} has wrong labels")
    return Decomposition(lam1.size() // 2, lam2.size() // 2, lam1, lam2, data)

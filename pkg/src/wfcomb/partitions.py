"""Integer partitions: normal forms, statistics, transpose, dominance, enumeration.

A partition is a weakly decreasing tuple of positive integers; trailing
zeros are stripped on construction so that equality and hashing see the
canonical form.  Reading an index beyond the length yields 0, which keeps
index-heavy formulas free of padding noise.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "Partition",
    "partitions_of",
    "partition_tuples",
    "sequence_add",
    "partition_from_sequence",
]


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if any(p < 0 for p in parts):
            raise DomainError(f"negative part in {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise DomainError(f"parts not weakly decreasing: {parts!r}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the text form "3,1,1"; "" and "0" denote the empty partition."""
        text = text.strip()
        if text in ("", "0"):
            return cls(())
        return cls(tuple(int(t) for t in text.split(",")))

    def to_text(self) -> str:
        return ",".join(str(p) for p in self.parts) if self.parts else "0"

    # -- basic statistics -----------------------------------------------------

    def size(self) -> int:
        return sum(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def part(self, j: int) -> int:
        """1-based part access; indices beyond the length read 0."""
        if j < 1:
            raise DomainError(f"part index must be >= 1, got {j}")
        return self.parts[j - 1] if j <= len(self.parts) else 0

    def prefix(self, k: int) -> int:
        """Sum of the first k parts (k may exceed the length)."""
        if k < 0:
            raise DomainError(f"prefix length must be >= 0, got {k}")
        return sum(self.parts[:k])

    def mult(self, i: int) -> int:
        """Multiplicity of the part value i (i >= 1; zero parts are not counted)."""
        if i < 1:
            raise DomainError(f"part value must be >= 1, got {i}")
        return sum(1 for p in self.parts if p == i)

    def mult_at_least(self, i: int) -> int:
        """Number of parts with value >= i."""
        if i < 1:
            raise DomainError(f"part value must be >= 1, got {i}")
        return sum(1 for p in self.parts if p >= i)

    def values(self) -> tuple[int, ...]:
        """Distinct part values, decreasing."""
        seen = []
        for p in self.parts:
            if not seen or seen[-1] != p:
                seen.append(p)
        return tuple(seen)

    # -- operations -----------------------------------------------------------

    def transpose(self) -> "Partition":
        if not self.parts:
            return Partition(())
        cols = tuple(
            sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)
        )
        return Partition(cols)

    def union(self, other: "Partition") -> "Partition":
        return Partition(tuple(sorted(self.parts + other.parts, reverse=True)))

    def plus(self, other: "Partition") -> "Partition":
        n = max(len(self.parts), len(other.parts))
        return Partition(tuple(self.part(j) + other.part(j) for j in range(1, n + 1)))

    def __or__(self, other: "Partition") -> "Partition":
        return self.union(other)

    def __add__(self, other: "Partition") -> "Partition":
        return self.plus(other)

    def leq(self, other: "Partition") -> bool:
        """Dominance: every prefix sum of self is at most that of other."""
        n = max(len(self.parts), len(other.parts))
        a = b = 0
        for j in range(1, n + 1):
            a += self.part(j)
            b += other.part(j)
            if a > b:
                return False
        return True

    def __le__(self, other: "Partition") -> bool:
        return self.leq(other)

    def __lt__(self, other: "Partition") -> bool:
        return self != other and self.leq(other)

    def __ge__(self, other: "Partition") -> bool:
        return other.leq(self)

    def __gt__(self, other: "Partition") -> bool:
        return self != other and other.leq(self)

    # -- dunder sugar ----------------------------------------------------------

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "()"


EMPTY = Partition(())


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in descending lexicographic order."""
    if n < 0:
        raise DomainError(f"cannot partition {n}")

    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for first in range(min(cap, rest), 0, -1):
            for tail in gen(rest - first, first):
                yield (first,) + tail

    return tuple(Partition(p) for p in gen(n, n))


def partition_tuples(k: int, n: int) -> tuple[tuple[Partition, ...], ...]:
    """All k-tuples of partitions with total size n, first coordinate largest first."""
    if k < 0:
        raise DomainError(f"tuple length must be >= 0, got {k}")
    if k == 0:
        return ((),) if n == 0 else ()
    out: list[tuple[Partition, ...]] = []
    for head_size in range(n, -1, -1):
        for head in partitions_of(head_size):
            for tail in partition_tuples(k - 1, n - head_size):
                out.append((head,) + tail)
    return tuple(out)


def sequence_add(p: Partition, seq: Iterable[int]) -> tuple[int, ...]:
    """Componentwise sum of a partition and an integer sequence, zero padded."""
    seq = tuple(seq)
    n = max(len(p.parts), len(seq))
    return tuple(
        p.part(j) + (seq[j - 1] if j <= len(seq) else 0) for j in range(1, n + 1)
    )


def partition_from_sequence(seq: Iterable[int]) -> Partition:
    """Re-verify that a plain integer sequence is a partition and wrap it."""
    seq = tuple(seq)
    if any(x < 0 for x in seq):
        raise DomainError(f"sequence has a negative entry: {seq!r}")
    if any(seq[i] < seq[i + 1] for i in range(len(seq) - 1)):
        raise DomainError(f"sequence is not weakly decreasing: {seq!r}")
    return Partition(seq)

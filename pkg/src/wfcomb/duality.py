"""Order-reversing dualities between the special partition classes.

The primary route goes through symbols: dualize the all-ones symbol and
invert the bijection.  Two independent characterizations (the step-sequence
identity and the dominance-floor description) are implemented as oracles
and must agree with the symbol route everywhere.
"""

from __future__ import annotations

from functools import lru_cache

from .classical import Kind, intervals, is_member, is_special, step_sequence
from .errors import ClassMismatchError, DomainError, InternalCheckError, NotSpecialError
from .partitions import Partition, partition_from_sequence, sequence_add
from .springer import (
    FamilyCoords,
    partition_of_special_symbol,
    special_closure,
    springer_symbol,
)
from .classical import SignVector, jord_bp
from .symbols import dual_symbol

__all__ = [
    "dual_kind",
    "dual_size",
    "dual_of_special",
    "dual_partition",
    "dual_via_step_sequence",
    "dual_via_dominance",
    "transport_coords",
]


def dual_kind(kind: Kind) -> Kind:
    if kind is Kind.SYMPLECTIC:
        return Kind.ORTH_ODD
    if kind is Kind.ORTH_ODD:
        return Kind.SYMPLECTIC
    return Kind.ORTH_EVEN


def dual_size(n: int, kind: Kind) -> int:
    if kind is Kind.SYMPLECTIC:
        return n + 1
    if kind is Kind.ORTH_ODD:
        return n - 1
    return n


def _ones(lam: Partition, kind: Kind) -> SignVector:
    return SignVector.ones(jord_bp(lam, kind), kind.orthogonal)


@lru_cache(maxsize=None)
def dual_of_special(lam: Partition, kind: Kind) -> Partition:
    """Symbol-route dual of a special partition."""
    if not is_special(lam, kind):
        raise NotSpecialError(f"{lam} is not special in class {kind.value}")
    sym = springer_symbol(lam, _ones(lam, kind), kind).symbol
    return partition_of_special_symbol(dual_symbol(sym), dual_kind(kind))


def dual_partition(lam: Partition, kind: Kind) -> Partition:
    """Dual of any class member: collapse to the special closure, then dualize."""
    return dual_of_special(special_closure(lam, kind), kind)


def dual_via_step_sequence(lam: Partition, kind: Kind) -> Partition:
    """Oracle: the transpose of lam + step_sequence(lam) equals the dual."""
    if not is_special(lam, kind):
        raise NotSpecialError(f"{lam} is not special in class {kind.value}")
    summed = sequence_add(lam, step_sequence(lam, kind))
    return partition_from_sequence(summed).transpose()


def dual_via_dominance(lam: Partition, kind: Kind) -> Partition:
    """Oracle: dominance-floor characterizations of the dual map."""
    from .induction import dominance_floor

    if not is_member(lam, kind):
        raise ClassMismatchError(f"{lam} is not in class {kind.value}")
    if kind is Kind.SYMPLECTIC:
        target = lam.union(Partition((1,))).transpose()
        return dominance_floor(target, Kind.ORTH_ODD)
    if kind is Kind.ORTH_ODD:
        head = lam.part(1)
        run = sum(1 for p in lam.parts if p == head)
        trimmed = Partition(
            tuple(
                p - 1 if idx == run - 1 else p for idx, p in enumerate(lam.parts)
            )
        )
        return dominance_floor(trimmed.transpose(), Kind.SYMPLECTIC)
    return dominance_floor(lam.transpose(), Kind.ORTH_EVEN)


def transport_coords(
    lam: Partition, kind: Kind, coords: FamilyCoords, defect_positive: bool = True
) -> FamilyCoords:
    """Carry interval coords across the dual's unique decreasing interval bijection.

    tau reverses; delta reverses with a one-step shift (index 0 reads 0).
    Defect-0 symbols additionally renormalize tau by its value on the
    largest interval.
    """
    struct = intervals(lam, kind)
    r = len(struct)
    if len(coords.taus) != r:
        raise DomainError(f"expected {r} coords for {lam} ({kind.value})")
    dual_struct = intervals(dual_of_special(lam, kind), dual_kind(kind))
    if len(dual_struct) != r:
        raise InternalCheckError(
            f"interval counts differ across duality for {lam} ({kind.value})"
        )
    taus = tuple(coords.taus[r - h] for h in range(1, r + 1))
    if not defect_positive:
        if kind is not Kind.ORTH_EVEN:
            raise DomainError("defect-0 transport only applies to the even orthogonal kind")
        if taus:
            shift = coords.taus[0]
            taus = tuple((t + shift) % 2 for t in taus)
    deltas = tuple(
        coords.deltas[r - h - 1] if r - h - 1 >= 0 else 0 for h in range(1, r + 1)
    )
    return FamilyCoords(taus, deltas)

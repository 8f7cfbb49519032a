"""Exhaustive verification sweeps.

Every suite enumerates a finite family of instances up to a size bound and
checks an exact identity on each.  There is no randomness anywhere; a
failing case is returned as a (case, detail) pair for counterexample
reporting.  Suites are exposed as picklable (generator, checker) pairs so
the CLI can fan instances across processes.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from .classical import (
    Kind,
    SignVector,
    enumerate_class,
    intervals,
    is_member,
    is_special,
    jord_bp,
    sign_vectors,
    step_sequence,
)
from .duality import (
    dual_kind,
    dual_of_special,
    dual_partition,
    dual_via_dominance,
    dual_via_step_sequence,
)
from .errors import CertificateError, DomainError, HypothesisError
from .induction import (
    LeviShape,
    cup,
    decompose_regular,
    dominance_floor,
    dominance_floor_bruteforce,
    endoscopic_induce,
    levi_dual,
    levi_induce,
)
from .multiplicity import (
    QuadInput,
    build_context,
    enumerate_support,
    support_condition,
    wavefront_certificate,
)
from .partitions import Partition, partition_from_sequence, partitions_of, sequence_add
from .springer import (
    FamilyCoords,
    admissible_sign_vectors,
    partition_of_special_symbol,
    special_closure,
    special_closure_bruteforce,
    special_closure_pair,
    springer_k,
    springer_symbol,
)
from .symbols import (
    Bipartition,
    bipartition_of,
    dual_symbol,
    family_members,
    is_special_symbol,
    same_family,
    special_symbols,
    symbol_from_bipartition,
)

Case = tuple  # picklable case payload
PARTITION_COUNTS = (1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42)


def _fail(case: Case, detail: str) -> tuple[Case, str]:
    return (case, detail)


# ---------------------------------------------------------------------------
# partitions


def gen_partitions(max_n: int) -> Iterator[Case]:
    """Bound = partition size (involution sweeps run to twice the bound)."""
    yield ("counts", max_n)
    for n in range(0, 2 * max_n + 1):
        yield ("involution", n)
    for n in range(0, max_n + 1):
        yield ("order_reversal", n)
    for n in range(0, min(max_n, 8) + 1):
        yield ("poset", n)
    for total in range(0, max_n + 3):
        yield ("union_transpose", total)


def check_partitions(case: Case) -> str | None:
    tag = case[0]
    if tag == "counts":
        for n in range(0, min(case[1], 10) + 1):
            if len(partitions_of(n)) != PARTITION_COUNTS[n]:
                return f"partition count at {n}"
        return None
    if tag == "involution":
        for lam in partitions_of(case[1]):
            if lam.transpose().transpose() != lam:
                return f"transpose not involutive at {lam}"
        return None
    if tag == "union_transpose":
        total = case[1]
        for a in range(0, total + 1):
            for lam in partitions_of(a):
                for mu in partitions_of(total - a):
                    if (lam | mu).transpose() != lam.transpose() + mu.transpose():
                        return f"union/sum transpose at {lam},{mu}"
        return None
    if tag == "order_reversal":
        for lam in partitions_of(case[1]):
            for mu in partitions_of(case[1]):
                if lam.leq(mu) != mu.transpose().leq(lam.transpose()):
                    return f"transpose not order reversing at {lam},{mu}"
        return None
    if tag == "poset":
        ps = partitions_of(case[1])
        for lam in ps:
            if not lam.leq(lam):
                return f"not reflexive at {lam}"
        for lam, mu in itertools.permutations(ps, 2):
            if lam.leq(mu) and mu.leq(lam):
                return f"not antisymmetric at {lam},{mu}"
        for lam, mu, nu in itertools.product(ps, repeat=3):
            if lam.leq(mu) and mu.leq(nu) and not lam.leq(nu):
                return f"not transitive at {lam},{mu},{nu}"
        return None
    return f"unknown case {case}"


# ---------------------------------------------------------------------------
# symbols


def _bipartitions(n: int) -> Iterator[Bipartition]:
    for a in range(n + 1):
        for alpha in partitions_of(a):
            for beta in partitions_of(n - a):
                yield Bipartition(alpha, beta)


def gen_symbols(max_n: int) -> Iterator[Case]:
    """Bound = symbol rank."""
    for n in range(0, max_n + 1):
        yield ("defect1", n)
        yield ("dual_sgn", n)
        yield ("families", n)
    for n in range(0, min(max_n, 6) + 1):
        yield ("family_dual", n)


def check_symbols(case: Case) -> str | None:
    tag, n = case
    if tag == "defect1":
        seen = set()
        for bp in _bipartitions(n):
            sym = symbol_from_bipartition(bp, 1)
            if sym.rank() != n or sym.defect() != 1:
                return f"bad rank/defect at {bp}"
            if sym in seen:
                return f"defect-1 map not injective at {bp}"
            seen.add(sym)
            back = bipartition_of(sym)
            if back != bp:
                return f"round trip failed at {bp}"
            if symbol_from_bipartition(bp, 0).defect() != 0:
                return f"defect-0 map broken at {bp}"
        return None
    if tag == "dual_sgn":
        for bp in _bipartitions(n):
            for defect in (0, 1):
                sym = symbol_from_bipartition(bp, defect)
                twisted = Bipartition(bp.beta.transpose(), bp.alpha.transpose())
                if dual_symbol(sym) != symbol_from_bipartition(twisted, defect):
                    return f"dual/sgn mismatch at {bp} defect {defect}"
                if dual_symbol(dual_symbol(sym)) != sym:
                    return f"dual not involutive at {bp}"
                if dual_symbol(sym).rank() != n or dual_symbol(sym).defect() != defect:
                    return f"dual changes invariants at {bp}"
        return None
    if tag == "families":
        for defect in (0, 1):
            for bp in _bipartitions(n):
                sym = symbol_from_bipartition(bp, defect)
                members = family_members(sym)
                if sym not in members:
                    return f"symbol outside own family at {bp}"
                special = [
                    m for m in members if m.defect() <= 1 and is_special_symbol(m)
                ]
                if len(special) != 1:
                    return f"family of {bp} (defect {defect}) has {len(special)} specials"
                for m in members:
                    if not same_family(m, sym):
                        return f"family key disagrees on members at {bp}"
                    if m.defect() % 2 != defect % 2:
                        return f"family mixes defect parities at {bp}"
                    if m.rank() != n:
                        return f"family member changes rank at {bp}"
                    if m.defect() <= 1:
                        back = symbol_from_bipartition(bipartition_of(m), m.defect())
                        if back != m:
                            return f"family member fails the round trip at {bp}"
        return None
    if tag == "family_dual":
        for defect in (0, 1):
            syms = {symbol_from_bipartition(bp, defect) for bp in _bipartitions(n)}
            for a, b in itertools.combinations(sorted(syms, key=str), 2):
                if same_family(a, b) != same_family(dual_symbol(a), dual_symbol(b)):
                    return f"duality breaks families at {a},{b}"
        return None
    return f"unknown case {case}"


# ---------------------------------------------------------------------------
# classical structure


def gen_classical(max_size: int) -> Iterator[Case]:
    """Bound = total partition size."""
    for n in range(0, max_size + 1):
        yield ("transpose_class", n)
        yield ("interval_parity", n)
        yield ("step_sum", n)
    for n in range(0, max_size // 2 + 1):
        yield ("counts", n)


def check_classical(case: Case) -> str | None:
    tag, n = case
    if tag == "transpose_class":
        pairs = [
            (Kind.SYMPLECTIC, Kind.SYMPLECTIC),
            (Kind.ORTH_ODD, Kind.ORTH_ODD),
            (Kind.ORTH_EVEN, Kind.SYMPLECTIC),
        ]
        for kind, dual in pairs:
            for lam in enumerate_class(n, kind):
                if is_special(lam, kind) != is_member(lam.transpose(), dual):
                    return f"specialness/transpose mismatch at {lam} ({kind.value})"
        return None
    if tag == "interval_parity":
        for kind in Kind:
            for lam in enumerate_class(n, kind, special_only=True):
                struct = intervals(lam, kind)  # parity checks run inside
                want = set(jord_bp(lam, kind))
                if kind is Kind.SYMPLECTIC:
                    want.add(0)
                got = {v for iv in struct for v in iv.values}
                if got != want:
                    return f"interval values wrong at {lam} ({kind.value})"
        return None
    if tag == "step_sum":
        for kind in Kind:
            for lam in enumerate_class(n, kind, special_only=True):
                summed = partition_from_sequence(
                    sequence_add(lam, step_sequence(lam, kind))
                )
                target = {
                    Kind.SYMPLECTIC: (Kind.ORTH_ODD, n + 1),
                    Kind.ORTH_ODD: (Kind.SYMPLECTIC, n - 1),
                    Kind.ORTH_EVEN: (Kind.ORTH_EVEN, n),
                }[kind]
                if summed.size() != target[1]:
                    return f"step sum size wrong at {lam} ({kind.value})"
                if not is_special(summed.transpose(), target[0]):
                    return f"step sum not special-dual at {lam} ({kind.value})"
        return None
    if tag == "counts":
        a = len(enumerate_class(2 * n, Kind.SYMPLECTIC, special_only=True))
        b = len(enumerate_class(2 * n + 1, Kind.ORTH_ODD, special_only=True))
        c = len(special_symbols(n, 1))
        if not (a == b == c):
            return f"special counts {a},{b},{c} differ at n={n}"
        d = len(enumerate_class(2 * n, Kind.ORTH_EVEN, special_only=True))
        e = len(special_symbols(n, 0))
        if d != e:
            return f"defect-0 special counts {d},{e} differ at n={n}"
        return None
    return f"unknown case {case}"


# ---------------------------------------------------------------------------
# springer


def gen_springer(max_n: int) -> Iterator[Case]:
    """Bound = rank; the quotient sweep covers sizes up to twice the bound."""
    for n in range(0, max_n + 1):
        yield ("bijection", n)
    for size in range(0, 2 * max_n + 1):
        yield ("k_quotient", size)


def check_springer(case: Case) -> str | None:
    tag, n = case
    if tag == "bijection":
        setups = (
            (Kind.SYMPLECTIC, 2 * n, 1),
            (Kind.ORTH_ODD, 2 * n + 1, 1),
            (Kind.ORTH_EVEN, 2 * n, 0),
        )
        for kind, size, defect in setups:
            image = {}
            for lam in enumerate_class(size, kind, special_only=True):
                eps = SignVector.ones(jord_bp(lam, kind), kind.orthogonal)
                sym = springer_symbol(lam, eps, kind).symbol
                if not is_special_symbol(sym):
                    return f"all-ones symbol of special {lam} not special ({kind.value})"
                if sym in image:
                    return f"symbol map collides at {lam} vs {image[sym]} ({kind.value})"
                image[sym] = lam
                if partition_of_special_symbol(sym, kind) != lam:
                    return f"symbol inversion fails at {lam} ({kind.value})"
            if set(image) != set(special_symbols(n, defect)):
                return f"image is not all special symbols at n={n} ({kind.value})"
        return None
    if tag == "k_quotient":
        size = n
        for kind in (Kind.ORTH_ODD, Kind.ORTH_EVEN):
            for lam in enumerate_class(size, kind):
                keys = jord_bp(lam, kind)
                for bits in range(1 << len(keys)):
                    raw = {
                        k: -1 if bits & (1 << idx) else 1 for idx, k in enumerate(keys)
                    }
                    a = springer_k(lam, SignVector.make(raw), kind)
                    b = springer_k(
                        lam, SignVector.make({k: -v for k, v in raw.items()}), kind
                    )
                    if a != b:
                        return f"series index not diagonal-invariant at {lam} ({kind.value})"
        return None
    return f"unknown case {case}"


# ---------------------------------------------------------------------------
# collapse (special closures)


def gen_collapse(max_size: int) -> Iterator[Case]:
    """Bound = total partition size."""
    for kind in Kind:
        for size in range(0, max_size + 1):
            yield (kind.value, size)


def check_collapse(case: Case) -> str | None:
    kind = Kind.parse(case[0])
    size = case[1]
    for lam in enumerate_class(size, kind):
        if special_closure(lam, kind) != special_closure_bruteforce(lam, kind):
            return f"closure routes disagree at {lam} ({kind.value})"
        for eps in sign_vectors(lam, kind):
            try:
                sp = special_closure_pair(lam, eps, kind)
            except HypothesisError:
                continue
            if not lam.leq(sp):
                return f"pair closure below input at {lam},{eps.items} ({kind.value})"
            if not is_special(sp, kind):
                return f"pair closure not special at {lam},{eps.items} ({kind.value})"
        if is_special(lam, kind):
            admissible = admissible_sign_vectors(lam, kind)
            for eps in admissible:
                if springer_k(lam, eps, kind) not in (0, 1):
                    return f"admissible sign vector has bad k at {lam} ({kind.value})"
                if special_closure_pair(lam, eps, kind) != lam:
                    return f"admissible vector moves {lam} ({kind.value})"
            fixed = {
                eps.items
                for eps in sign_vectors(lam, kind)
                if _keeps(lam, eps, kind)
            }
            if fixed != {eps.items for eps in admissible}:
                return f"admissible set wrong at {lam} ({kind.value})"
            coords = {family_coords_tuple(lam, eps, kind) for eps in admissible}
            r = len(intervals(lam, kind))
            expected = {t for t in itertools.product((0, 1), repeat=r) if _tau_ok(t, kind)}
            if coords != expected:
                return f"coordinate bijection wrong at {lam} ({kind.value})"
    return None


def _tau_ok(taus: tuple[int, ...], kind: Kind) -> bool:
    if not taus:
        return True
    return taus[-1] == 0 if kind is Kind.SYMPLECTIC else taus[0] == 0


def family_coords_tuple(lam: Partition, eps: SignVector, kind: Kind) -> tuple[int, ...]:
    from .springer import family_coords

    return family_coords(lam, eps, kind).taus


def _keeps(lam: Partition, eps: SignVector, kind: Kind) -> bool:
    want = {Kind.SYMPLECTIC: 0, Kind.ORTH_ODD: 1, Kind.ORTH_EVEN: 0}[kind]
    if springer_k(lam, eps, kind) != want:
        return False
    try:
        return special_closure_pair(lam, eps, kind) == lam
    except HypothesisError:
        return False


# ---------------------------------------------------------------------------
# duality


def gen_duality(max_even: int) -> Iterator[Case]:
    """Bound = even size; odd-size classes run one unit higher."""
    for kind in Kind:
        sizes = {
            Kind.SYMPLECTIC: range(0, max_even + 1, 2),
            Kind.ORTH_ODD: range(1, max_even + 2, 2),
            Kind.ORTH_EVEN: range(0, max_even + 1, 2),
        }[kind]
        for size in sizes:
            yield ("triple", kind.value, size)
    for size in range(0, min(max_even, 10) + 1):
        yield ("reversal", size)


def check_duality(case: Case) -> str | None:
    if case[0] == "triple":
        kind = Kind.parse(case[1])
        size = case[2]
        for lam in enumerate_class(size, kind, special_only=True):
            a = dual_of_special(lam, kind)
            b = dual_via_step_sequence(lam, kind)
            c = dual_via_dominance(lam, kind)
            if not (a == b == c):
                return f"dual routes disagree at {lam} ({kind.value}): {a},{b},{c}"
            if not is_special(a, dual_kind(kind)):
                return f"dual not special at {lam} ({kind.value})"
            if dual_of_special(a, dual_kind(kind)) != lam:
                return f"dual not involutive at {lam} ({kind.value})"
            if len(intervals(a, dual_kind(kind))) != len(intervals(lam, kind)):
                return f"interval counts change at {lam} ({kind.value})"
        for lam in enumerate_class(size, kind):
            d = dual_partition(lam, kind)
            if d != dual_via_dominance(lam, kind):
                return f"general dual disagrees at {lam} ({kind.value})"
            if special_closure(d, dual_kind(kind)) != d:
                return f"general dual not special at {lam} ({kind.value})"
        return None
    size = case[1]
    for kind in Kind:
        if kind is Kind.ORTH_ODD:
            if size % 2 == 0:
                continue
        elif size % 2:
            continue
        members = enumerate_class(size, kind)
        for lam, mu in itertools.product(members, repeat=2):
            if lam.leq(mu):
                if not dual_partition(mu, kind).leq(dual_partition(lam, kind)):
                    return f"duality not order reversing at {lam},{mu} ({kind.value})"
    return None


# ---------------------------------------------------------------------------
# induction


def _levi_shapes(n: int) -> Iterator[LeviShape]:
    def comps(rest: int) -> Iterator[tuple[int, ...]]:
        yield ()
        for first in range(1, rest + 1):
            for tail in comps(rest - first):
                yield (first,) + tail

    for core in range(0, n + 1):
        for gl in comps(n - core):
            yield LeviShape(gl, core)


def gen_induction(max_n: int) -> Iterator[Case]:
    # Levi sweeps run to max_n; the endoscopic inequality runs one unit
    # further, matching the paired bounds the two checks are quoted at.
    for n in range(0, max_n + 1):
        yield ("cup_dual", n)
    for n in range(0, min(max_n, 4) + 1):
        yield ("monotone", n)
    for total in range(0, max_n + 2):
        yield ("endo", total)
    for size in range(0, 2 * max_n + 1):
        yield ("floor", size)


def _symp_tuples(shape: LeviShape) -> Iterator[tuple[Partition, ...]]:
    pools = [partitions_of(sz) for sz in shape.gl_sizes]
    pools.append(enumerate_class(2 * shape.core, Kind.SYMPLECTIC))
    yield from itertools.product(*pools)


def check_induction(case: Case) -> str | None:
    tag, n = case
    if tag == "floor":
        for kind in Kind:
            for lam in partitions_of(n):
                try:
                    fast = dominance_floor(lam, kind)
                except DomainError:
                    continue
                if fast != dominance_floor_bruteforce(lam, kind):
                    return f"floor routes disagree at {lam} ({kind.value})"
        return None
    if tag == "cup_dual":
        for shape in _levi_shapes(n):
            for parts in _symp_tuples(shape):
                left = dual_partition(cup(shape, parts), Kind.SYMPLECTIC)
                right = levi_induce(shape, levi_dual(parts))
                if left != right:
                    return f"cup/induce duality fails at {shape},{parts}"
        return None
    if tag == "monotone":
        for shape in _levi_shapes(n):
            tuples = list(_symp_tuples(shape))
            duals = {t: levi_dual(t) for t in tuples}
            for t1, t2 in itertools.product(tuples, repeat=2):
                d1, d2 = duals[t1], duals[t2]
                if d1 == d2:
                    continue
                if all(a.leq(b) for a, b in zip(d1, d2)):
                    i1 = levi_induce(shape, d1)
                    i2 = levi_induce(shape, d2)
                    if not (i1.leq(i2) and i1 != i2):
                        return f"levi induction not strictly monotone at {shape}"
        return None
    if tag == "endo":
        for n1 in range(0, n + 1):
            n2 = n - n1
            for lam1 in enumerate_class(2 * n1, Kind.SYMPLECTIC, special_only=True):
                for lam2 in enumerate_class(2 * n2, Kind.ORTH_EVEN, special_only=True):
                    data = endoscopic_induce(lam1, lam2)
                    bound = dual_partition(data.induced, Kind.SYMPLECTIC)
                    union = dual_partition(lam1, Kind.SYMPLECTIC).union(
                        dual_partition(lam2, Kind.ORTH_EVEN)
                    )
                    if not union.leq(bound):
                        return f"dual union exceeds dual of induced at {lam1},{lam2}"
        return None
    return f"unknown case {case}"


# ---------------------------------------------------------------------------
# decomposition


def _admissible_taus(lam: Partition) -> Iterator[dict[int, int]]:
    values = jord_bp(lam, Kind.SYMPLECTIC)
    free = [i for i in values if lam.mult(i) >= 2]
    for bits in range(1 << len(free)):
        tau = {i: 0 for i in values}
        for idx, i in enumerate(free):
            tau[i] = 1 if bits & (1 << idx) else 0
        yield tau


def _all_even_symplectic(size: int) -> Iterator[Partition]:
    for lam in enumerate_class(size, Kind.SYMPLECTIC):
        if all(p % 2 == 0 for p in lam.parts):
            yield lam


def gen_decompose(max_size: int) -> Iterator[Case]:
    """Bound = total size of the all-even input."""
    for size in range(0, max_size + 1, 2):
        yield ("decompose", size)


def check_decompose(case: Case) -> str | None:
    size = case[1]
    from .duality import dual_partition

    for lam in _all_even_symplectic(size):
        for tau in _admissible_taus(lam):
            dec = decompose_regular(lam, tau)  # internal checks cover (a) and (c)
            union = dual_partition(dec.lam1, Kind.SYMPLECTIC).union(
                dual_partition(dec.lam2, Kind.ORTH_EVEN)
            )
            if union != dual_partition(lam, Kind.SYMPLECTIC):
                return f"dual union wrong at {lam}, tau={tau}"
    return None


# ---------------------------------------------------------------------------
# contexts and support


def _context_inputs(max_size: int) -> Iterator[tuple]:
    for total in range(0, max_size // 2 + 1):
        for n1 in range(0, total + 1):
            n2 = total - n1
            for lam1 in enumerate_class(2 * n1, Kind.SYMPLECTIC, special_only=True):
                for lam2 in enumerate_class(2 * n2, Kind.ORTH_EVEN, special_only=True):
                    data = endoscopic_induce(lam1, lam2)
                    if not data.regular:
                        continue
                    if any(p % 2 for p in data.induced.parts):
                        continue
                    r1 = len(intervals(lam1, Kind.SYMPLECTIC))
                    r2 = len(intervals(lam2, Kind.ORTH_EVEN))
                    for taus1 in itertools.product((0, 1), repeat=r1):
                        if taus1 and taus1[-1] != 0:
                            continue
                        for taus2 in itertools.product((0, 1), repeat=r2):
                            if taus2 and taus2[0] != 0:
                                continue
                            yield lam1, lam2, taus1, taus2


def gen_context(max_size: int) -> Iterator[Case]:
    """Bound = total size of the induced partition."""
    for payload in _context_inputs(max_size):
        yield ("context",) + payload


def check_context(case: Case) -> str | None:
    _, lam1, lam2, taus1, taus2 = case
    ctx = build_context(
        lam1,
        lam2,
        FamilyCoords(taus1, (0,) * len(taus1)),
        FamilyCoords(taus2, (0,) * len(taus2)),
    )  # the two parity/label identities are asserted inside
    for i in ctx.values():
        if (ctx.c(1, i) + ctx.c(-1, i)) % 2 != ctx.lam.mult(i) % 2:
            return f"step parities do not track multiplicities at {i} in {ctx.lam}"
    return None


def gen_support(max_size: int) -> Iterator[Case]:
    """Bound = total size of the induced partition."""
    for payload in _context_inputs(max_size):
        yield ("support",) + payload


def _all_splittings(lam: Partition) -> Iterator[tuple[Partition, Partition]]:
    values = jord_bp(lam, Kind.SYMPLECTIC)

    def rec(idx: int, second: list[int]) -> Iterator[tuple[Partition, Partition]]:
        if idx == len(values):
            pp = Partition(tuple(sorted(second, reverse=True)))
            rest = list(lam.parts)
            for v in second:
                rest.remove(v)
            yield Partition(tuple(rest)), pp
            return
        i = values[idx]
        for m in range(0, lam.mult(i) + 1):
            yield from rec(idx + 1, second + [i] * m)

    yield from rec(0, [])


def check_support(case: Case) -> str | None:
    _, lam1, lam2, taus1, taus2 = case
    ctx = build_context(
        lam1,
        lam2,
        FamilyCoords(taus1, (0,) * len(taus1)),
        FamilyCoords(taus2, (0,) * len(taus2)),
    )
    for zeta in (1, -1):
        fast = set()
        for (lp, ep), (lpp, epp) in enumerate_support(ctx, zeta):
            fast.add((lp.parts, ep.items, lpp.parts, epp.items))
        brute = set()
        for lp, lpp in _all_splittings(ctx.lam):
            for ep in sign_vectors(lp, Kind.SYMPLECTIC):
                for epp in sign_vectors(lpp, Kind.SYMPLECTIC):
                    if support_condition(ctx, zeta, (lp, ep), (lpp, epp)):
                        brute.add((lp.parts, ep.items, lpp.parts, epp.items))
        if fast != brute:
            return f"support enumeration disagrees at {ctx.lam1},{ctx.lam2},zeta={zeta}"
    return None


# ---------------------------------------------------------------------------
# wavefront


def _quad_inputs(max_size: int) -> Iterator[QuadInput]:
    for size in range(2, max_size + 1, 2):
        for lam in _all_even_symplectic(size):
            for lp, lm in _all_splittings(lam):
                for ep in sign_vectors(lp, Kind.SYMPLECTIC):
                    for em in sign_vectors(lm, Kind.SYMPLECTIC):
                        yield QuadInput(lp, ep, lm, em)


def gen_wavefront(max_size: int) -> Iterator[Case]:
    """Bound = total size of the union of the two inputs."""
    for q in _quad_inputs(max_size):
        yield (
            "wavefront",
            q.lam_plus,
            q.eps_plus.items,
            q.lam_minus,
            q.eps_minus.items,
        )


def check_wavefront(case: Case) -> str | None:
    _, lp, ep, lm, em = case
    q = QuadInput(lp, SignVector(ep), lm, SignVector(em))
    try:
        report = wavefront_certificate(q)
    except CertificateError as exc:
        return f"verdict {exc.verdict} failed at {q.to_json()}"
    if not report.passed():
        return f"report not fully passing at {q.to_json()}"
    return None


# ---------------------------------------------------------------------------
# runner

SUITES: dict[str, tuple[Callable[[int], Iterable[Case]], Callable[[Case], str | None]]] = {
    "partitions": (gen_partitions, check_partitions),
    "symbols": (gen_symbols, check_symbols),
    "classical": (gen_classical, check_classical),
    "springer": (gen_springer, check_springer),
    "collapse": (gen_collapse, check_collapse),
    "duality": (gen_duality, check_duality),
    "induction": (gen_induction, check_induction),
    "decompose": (gen_decompose, check_decompose),
    "context": (gen_context, check_context),
    "support": (gen_support, check_support),
    "wavefront": (gen_wavefront, check_wavefront),
}

# Bounds used by `verify --suite all`; each suite interprets its bound in
# the measure its generator documents (rank n or total size, see above).
DEFAULT_BOUNDS = {
    "partitions": 10,
    "symbols": 6,
    "classical": 12,
    "springer": 5,
    "collapse": 10,
    "duality": 12,
    "induction": 4,
    "decompose": 10,
    "context": 10,
    "support": 8,
    "wavefront": 8,
}


@dataclass
class SuiteResult:
    name: str
    bound: int
    cases: int
    failures: list[tuple[Case, str]]

    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "bound": self.bound,
            "cases": self.cases,
            "failures": [
                {"case": repr(case), "detail": detail} for case, detail in self.failures
            ],
        }


def _run_one(payload: tuple[str, Case]) -> tuple[Case, str | None]:
    name, case = payload
    try:
        return case, SUITES[name][1](case)
    except Exception as exc:  # noqa: BLE001 - surfaced as a counterexample
        return case, f"{type(exc).__name__}: {exc}"


def run_suite(name: str, bound: int, jobs: int = 1) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    gen, _ = SUITES[name]
    cases = list(gen(bound))
    failures: list[tuple[Case, str]] = []
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for case, detail in pool.map(
                _run_one, ((name, c) for c in cases), chunksize=4
            ):
                if detail is not None:
                    failures.append((case, detail))
    else:
        for case in cases:
            _, detail = _run_one((name, case))
            if detail is not None:
                failures.append((case, detail))
    return SuiteResult(name, bound, len(cases), failures)

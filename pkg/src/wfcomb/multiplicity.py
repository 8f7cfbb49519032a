"""Support conditions, sign calculus and wavefront certificates.

`build_context` packages a regularly-inducing special pair together with
the four Z/2-functions (two parity budgets, two sign labels) that control
which splittings of the induced partition can carry nonzero multiplicity.
`wavefront_certificate` runs the whole pipeline for one input quadruple
and checks every identity the construction promises.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .classical import Kind, SignVector, intervals, is_member, jord_bp
from .duality import dual_of_special, dual_partition, transport_coords
from .errors import CertificateError, DomainError, InternalCheckError
from .induction import Decomposition, EndoData, decompose_regular, endoscopic_induce
from .partitions import Partition
from .springer import FamilyCoords, signs_from_coords

__all__ = [
    "EndoContext",
    "build_context",
    "support_condition",
    "enumerate_support",
    "QuadInput",
    "tau_from_signs",
    "sign_factor",
    "multiplicity_value",
    "form_indicator",
    "WavefrontReport",
    "wavefront_certificate",
]

_PLUS, _MINUS = 1, -1


def _flip(zeta: int) -> int:
    return -zeta


@dataclass(frozen=True)
class EndoContext:
    lam1: Partition
    lam2: Partition
    tau1: FamilyCoords
    tau2: FamilyCoords
    data: EndoData
    lam: Partition
    delta_plus: tuple[tuple[int, int], ...]
    delta_minus: tuple[tuple[int, int], ...]
    tau_plus: tuple[tuple[int, int], ...]
    tau_minus: tuple[tuple[int, int], ...]
    delta_branch_fires: int

    def _get(self, table: tuple[tuple[int, int], ...], i: int) -> int:
        for k, v in table:
            if k == i:
                return v
        raise DomainError(f"{i} is not a distinguished value of {self.lam}")

    def delta(self, zeta: int, i: int) -> int:
        return self._get(self.delta_plus if zeta == _PLUS else self.delta_minus, i)

    def tau(self, zeta: int, i: int) -> int:
        return self._get(self.tau_plus if zeta == _PLUS else self.tau_minus, i)

    def values(self) -> tuple[int, ...]:
        return jord_bp(self.lam, Kind.SYMPLECTIC)

    def next_value(self, i: int) -> int | None:
        bigger = [v for v in self.values() if v > i]
        return min(bigger) if bigger else None

    def delta_step(self, zeta: int, i: int) -> int:
        """delta(i) - delta(next value) mod 2; past the top the budget reads 1."""
        nxt = self.next_value(i)
        top = 1 if nxt is None else self.delta(zeta, nxt)
        return (self.delta(zeta, i) - top) % 2

    def c(self, zeta: int, i: int) -> int:
        """Parity forced on the second factor's multiplicity at value i."""
        return self.delta_step(_flip(zeta), i)

    def to_json(self) -> dict:
        return {
            "lambda1": self.lam1.to_text(),
            "lambda2": self.lam2.to_text(),
            "lambda": self.lam.to_text(),
            "delta_plus": {str(i): v for i, v in self.delta_plus},
            "delta_minus": {str(i): v for i, v in self.delta_minus},
            "tau_plus": {str(i): v for i, v in self.tau_plus},
            "tau_minus": {str(i): v for i, v in self.tau_minus},
            "delta_branch_fires": self.delta_branch_fires,
        }


def build_context(
    lam1: Partition, lam2: Partition, tau1: FamilyCoords, tau2: FamilyCoords
) -> EndoContext:
    """Assemble the sign-calculus context of a regularly-inducing pair."""
    data = endoscopic_induce(lam1, lam2)
    if not data.regular:
        raise DomainError(f"{lam1}, {lam2} do not induce regularly")
    lam = data.induced
    if any(p % 2 for p in lam.parts):
        raise DomainError(f"induced partition {lam} has an odd part")
    s1 = intervals(lam1, Kind.SYMPLECTIC)
    s2 = intervals(lam2, Kind.ORTH_EVEN)
    if len(tau1.taus) != len(s1) or len(tau2.taus) != len(s2):
        raise DomainError("interval label lengths do not match the factors")
    if any(d != 0 for d in tau1.deltas + tau2.deltas):
        raise DomainError("factor labels must have vanishing delta coordinates")
    t1 = dict(zip((iv.values for iv in s1), tau1.taus))
    t2 = dict(zip((iv.values for iv in s2), tau2.taus))

    fires = 0
    dp: list[tuple[int, int]] = []
    dm: list[tuple[int, int]] = []
    tp: list[tuple[int, int]] = []
    tm: list[tuple[int, int]] = []
    j_plus = set(data.j_plus)
    for i in jord_bp(lam, Kind.SYMPLECTIC):
        rel = data.relative_for_value(i)
        j_hi = int(rel.j_hi)

        def owning(struct, factor: Partition):
            v = factor.part(j_hi)
            return struct.containing(v)

        if j_hi in j_plus:
            fires += 1
            d1 = t1[owning(s1, lam1).values]
            d2 = t2[owning(s2, lam2).values]
            dp.append((i, (d1 + d2 + 1) % 2))
            dm.append((i, (d1 + d2) % 2))
        else:
            dp.append((i, 0))
            dm.append((i, 0))

        if lam.mult(i) == 1:
            tp.append((i, t1[owning(s1, lam1).values]))
            tm.append((i, t1[owning(s1, lam1).values]))
        else:
            owners = []
            for side, struct, factor in ((1, s1, lam1), (2, s2, lam2)):
                v = factor.part(rel.j_lo)
                for iv in struct:
                    if v in iv.values and iv.j_min <= rel.j_lo and rel.j_hi <= iv.j_max:
                        owners.append((side, iv))
            if len(owners) != 1:
                raise InternalCheckError(f"value {i} not owned by exactly one interval")
            side, iv = owners[0]
            if side == 1:
                tp.append((i, t1[iv.values]))
                tm.append((i, t1[iv.values]))
            else:
                tp.append((i, t2[iv.values]))
                tm.append((i, (t2[iv.values] + 1) % 2))

    ctx = EndoContext(
        lam1,
        lam2,
        tau1,
        tau2,
        data,
        lam,
        tuple(dp),
        tuple(dm),
        tuple(tp),
        tuple(tm),
        fires,
    )
    _check_context(ctx)
    return ctx


def _check_context(ctx: EndoContext) -> None:
    tau_rel = ctx.data.tau_rel_dict()
    for i in ctx.values():
        if (ctx.tau(_PLUS, i) + ctx.tau(_MINUS, i)) % 2 != tau_rel[i]:
            raise InternalCheckError(f"sign labels do not sum to the relative label at {i}")
        if (ctx.delta(_PLUS, i) + ctx.delta(_MINUS, i)) % 2 != ctx.lam.mult_at_least(i) % 2:
            raise InternalCheckError(f"parity budgets do not track tail counts at {i}")


def support_condition(
    ctx: EndoContext,
    zeta: int,
    primed: tuple[Partition, SignVector],
    doubled: tuple[Partition, SignVector],
) -> bool:
    """True when the splitting can carry the multiplicity for this sign."""
    lam_p, eps_p = primed
    lam_pp, eps_pp = doubled
    if lam_p.union(lam_pp) != ctx.lam:
        return False
    for i in ctx.values():
        if lam_pp.mult(i) % 2 != ctx.c(zeta, i):
            return False
    for i in jord_bp(lam_p, Kind.SYMPLECTIC):
        if eps_p.value(i) != (-1) ** ctx.tau(zeta, i):
            return False
    for i in jord_bp(lam_pp, Kind.SYMPLECTIC):
        if eps_pp.value(i) != (-1) ** ctx.tau(_flip(zeta), i):
            return False
    return True


def enumerate_support(
    ctx: EndoContext, zeta: int
) -> tuple[tuple[tuple[Partition, SignVector], tuple[Partition, SignVector]], ...]:
    """All splittings satisfying the support condition, signs forced."""
    values = ctx.values()

    def assemble(mults: dict[int, int]) -> tuple:
        second = []
        first = []
        for i in values:
            second.extend([i] * mults[i])
            first.extend([i] * (ctx.lam.mult(i) - mults[i]))
        lam_pp = Partition(tuple(sorted(second, reverse=True)))
        lam_p = Partition(tuple(sorted(first, reverse=True)))
        eps_p = SignVector.make(
            {i: (-1) ** ctx.tau(zeta, i) for i in jord_bp(lam_p, Kind.SYMPLECTIC)}
        )
        eps_pp = SignVector.make(
            {i: (-1) ** ctx.tau(_flip(zeta), i) for i in jord_bp(lam_pp, Kind.SYMPLECTIC)}
        )
        return ((lam_p, eps_p), (lam_pp, eps_pp))

    def rec(idx: int, current: dict[int, int]) -> Iterator[dict[int, int]]:
        if idx == len(values):
            yield dict(current)
            return
        i = values[idx]
        want = ctx.c(zeta, i)
        for m in range(want, ctx.lam.mult(i) + 1, 2):
            current[i] = m
            yield from rec(idx + 1, current)
        current.pop(i, None)

    return tuple(assemble(m) for m in rec(0, {}))


@dataclass(frozen=True)
class QuadInput:
    """Two all-even symplectic partitions with independent sign vectors."""

    lam_plus: Partition
    eps_plus: SignVector
    lam_minus: Partition
    eps_minus: SignVector

    def __post_init__(self) -> None:
        for lam, eps in ((self.lam_plus, self.eps_plus), (self.lam_minus, self.eps_minus)):
            if not is_member(lam, Kind.SYMPLECTIC) or any(p % 2 for p in lam.parts):
                raise DomainError(f"{lam} is not an all-even symplectic partition")
            if eps.diagonal_quotient:
                raise DomainError("sign vectors here are not taken modulo the diagonal")
            if eps.keys() != jord_bp(lam, Kind.SYMPLECTIC):
                raise DomainError(f"sign vector keys do not match {lam}")
        if self.lam_plus.size() + self.lam_minus.size() == 0:
            raise DomainError("the zero-rank quadruple is excluded")

    def lam(self) -> Partition:
        return self.lam_plus.union(self.lam_minus)

    def eps(self, side: int, i: int) -> int:
        lam = self.lam_plus if side == _PLUS else self.lam_minus
        eps = self.eps_plus if side == _PLUS else self.eps_minus
        return eps.value(i) if lam.mult(i) else 1

    def to_json(self) -> dict:
        return {
            "lambda_plus": self.lam_plus.to_text(),
            "eps_plus": self.eps_plus.to_json(),
            "lambda_minus": self.lam_minus.to_text(),
            "eps_minus": self.eps_minus.to_json(),
        }


def tau_from_signs(q: QuadInput) -> dict[int, int]:
    """Z/2-label per distinguished value: 0 on multiplicity one, sign product else."""
    lam = q.lam()
    out: dict[int, int] = {}
    for i in jord_bp(lam, Kind.SYMPLECTIC):
        if lam.mult(i) == 1:
            out[i] = 0
        elif q.lam_plus.mult(i) and q.lam_minus.mult(i):
            out[i] = 0 if q.eps(_PLUS, i) * q.eps(_MINUS, i) == 1 else 1
        else:
            out[i] = 0
    return out


def sign_factor(q: QuadInput, ctx: EndoContext, zeta: int, i: int) -> int:
    """Per-value factor of the multiplicity product; never zero."""
    mp = q.lam_plus.mult(i)
    mm = q.lam_minus.mult(i)
    ep = q.eps(_PLUS, i)
    em = q.eps(_MINUS, i)
    c = ctx.c(zeta, i)
    tz = ctx.tau(zeta, i)
    tf = ctx.tau(_flip(zeta), i)
    if c == 1:
        if mm == 0:
            return ep
        if mp == 0:
            return em * (-1) ** (tf + tz * (mm - 1))
        return 2 * ep * (-1) ** (mm * tz)
    if mp * mm == 0:
        return (-1) ** (mm * tz)
    return 2 * (-1) ** (mm * tz)


def multiplicity_value(q: QuadInput, ctx: EndoContext, zeta: int) -> Fraction:
    """Product formula for the multiplicity attached to one sign."""
    weight = len(jord_bp(q.lam_plus, Kind.SYMPLECTIC)) + len(
        jord_bp(q.lam_minus, Kind.SYMPLECTIC)
    )
    out = Fraction(1, 2**weight)
    for i in ctx.values():
        out *= sign_factor(q, ctx, zeta, i)
    return out


def form_indicator(q: QuadInput) -> str:
    """"iso" or "an", read off the sign product over both factors."""
    c = 1
    for i in jord_bp(q.lam_plus, Kind.SYMPLECTIC):
        c *= q.eps_plus.value(i) ** q.lam_plus.mult(i)
    for i in jord_bp(q.lam_minus, Kind.SYMPLECTIC):
        c *= q.eps_minus.value(i) ** q.lam_minus.mult(i)
    return "iso" if c == 1 else "an"


@dataclass(frozen=True)
class WavefrontReport:
    quad: QuadInput
    lam: Partition
    indicator: str
    dual: Partition
    tau: tuple[tuple[int, int], ...]
    decomposition: Decomposition
    mu1: Partition
    mu2: Partition
    eta1: SignVector
    eta2: SignVector
    s_plus: tuple[tuple[int, int], ...]
    s_minus: tuple[tuple[int, int], ...]
    m_plus: Fraction
    m_minus: Fraction
    verdicts: tuple[tuple[str, bool], ...]
    delta_branch_fires: int

    def passed(self) -> bool:
        return all(ok for _, ok in self.verdicts)

    def to_json(self) -> dict:
        return {
            "input": self.quad.to_json(),
            "lambda": self.lam.to_text(),
            "form": self.indicator,
            "dual": self.dual.to_text(),
            "tau": {str(i): t for i, t in self.tau},
            "n1": self.decomposition.n1,
            "n2": self.decomposition.n2,
            "lambda1": self.decomposition.lam1.to_text(),
            "lambda2": self.decomposition.lam2.to_text(),
            "mu1": self.mu1.to_text(),
            "mu2": self.mu2.to_text(),
            "eta1": self.eta1.to_json(),
            "eta2": self.eta2.to_json(),
            "S_plus": {str(i): s for i, s in self.s_plus},
            "S_minus": {str(i): s for i, s in self.s_minus},
            "m_plus": str(self.m_plus),
            "m_minus": str(self.m_minus),
            "verdicts": dict(self.verdicts),
            "delta_branch_fires": self.delta_branch_fires,
        }


def wavefront_certificate(q: QuadInput) -> WavefrontReport:
    """Run the full pipeline for one quadruple and check every promised identity."""
    lam = q.lam()
    tau = tau_from_signs(q)
    dec = decompose_regular(lam, tau)
    ctx = build_context(
        dec.lam1,
        dec.lam2,
        FamilyCoords.zeros(len(intervals(dec.lam1, Kind.SYMPLECTIC))),
        FamilyCoords.zeros(len(intervals(dec.lam2, Kind.ORTH_EVEN))),
    )
    mu1 = dual_of_special(dec.lam1, Kind.SYMPLECTIC)
    mu2 = dual_of_special(dec.lam2, Kind.ORTH_EVEN)
    eta1 = signs_from_coords(
        mu1,
        transport_coords(dec.lam1, Kind.SYMPLECTIC, ctx.tau1, defect_positive=True),
        Kind.ORTH_ODD,
    )
    eta2 = signs_from_coords(
        mu2,
        transport_coords(dec.lam2, Kind.ORTH_EVEN, ctx.tau2, defect_positive=False),
        Kind.ORTH_EVEN,
    )
    values = ctx.values()
    s_plus = tuple((i, sign_factor(q, ctx, _PLUS, i)) for i in values)
    s_minus = tuple((i, sign_factor(q, ctx, _MINUS, i)) for i in values)
    m_plus = multiplicity_value(q, ctx, _PLUS)
    m_minus = multiplicity_value(q, ctx, _MINUS)
    indicator = form_indicator(q)
    sign = 1 if indicator == "iso" else -1

    dual = dual_partition(lam, Kind.SYMPLECTIC)
    ratio_ok = all(
        sm == (q.eps(_PLUS, i) ** q.lam_plus.mult(i))
        * (q.eps(_MINUS, i) ** q.lam_minus.mult(i))
        * sp
        for (i, sp), (_, sm) in zip(s_plus, s_minus)
    )
    verdicts = (
        ("regular_induction", ctx.data.regular),
        ("dual_union", mu1.union(mu2) == dual),
        ("tau_match", ctx.data.tau_rel_dict() == tau),
        ("factors_nonzero", all(s != 0 for _, s in s_plus + s_minus)),
        ("sign_ratio", ratio_ok),
        ("combination_nonzero", m_plus + sign * m_minus != 0),
        ("anisotropic_needs_core", indicator == "iso" or dec.n2 >= 1),
    )
    report = WavefrontReport(
        q,
        lam,
        indicator,
        dual,
        tuple(sorted(tau.items(), reverse=True)),
        dec,
        mu1,
        mu2,
        eta1,
        eta2,
        s_plus,
        s_minus,
        m_plus,
        m_minus,
        verdicts,
        ctx.delta_branch_fires,
    )
    for name, ok in verdicts:
        if not ok:
            raise CertificateError(name, report)
    return report

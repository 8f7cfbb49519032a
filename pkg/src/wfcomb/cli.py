"""Command-line front end.

Exit codes: 0 success, 1 domain error (machine-readable JSON on stderr),
2 verification failure (counterexample payload on stderr).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .classical import (
    Kind,
    SignVector,
    classify,
    enumerate_class,
    intervals,
    is_member,
    is_special,
    jord_bp,
    step_sequence,
)
from .duality import (
    dual_kind,
    dual_of_special,
    dual_partition,
    dual_via_dominance,
    dual_via_step_sequence,
)
from .errors import CertificateError, DomainError
from .induction import LeviShape, cup, decompose_regular, endoscopic_induce, levi_induce
from .multiplicity import QuadInput, wavefront_certificate
from .partitions import Partition, partition_tuples, partitions_of
from .springer import special_closure, springer_k, springer_symbol
from .symbols import Symbol, bipartition_of, dual_symbol, family_members, is_special_symbol
from .verify import DEFAULT_BOUNDS, SUITES, run_suite

ENV_BOUND = "WFCOMB_MAX_N"


def _parse_tau(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    if not text.strip():
        return out
    for chunk in text.split(","):
        key, _, val = chunk.partition("=")
        out[int(key)] = int(val)
    return out


def _emit(payload, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["key", "value"])
        for key, value in _flatten(payload):
            writer.writerow([key, value])
    else:
        for key, value in _flatten(payload):
            print(f"{key}: {value}")


def _flatten(payload, prefix: str = "") -> list[tuple[str, str]]:
    rows: list[tuple[str, str]] = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            rows.extend(_flatten(payload[key], f"{prefix}{key}." if prefix else f"{key}."))
        if not payload:
            rows.append((prefix.rstrip("."), "{}"))
    elif isinstance(payload, (list, tuple)):
        for idx, item in enumerate(payload):
            rows.extend(_flatten(item, f"{prefix}{idx}."))
        if not payload:
            rows.append((prefix.rstrip("."), "[]"))
    else:
        rows.append((prefix.rstrip("."), str(payload)))
    return rows


def _config_echo(args: argparse.Namespace) -> dict:
    skip = {"func"}
    return {k: v for k, v in sorted(vars(args).items()) if k not in skip and v is not None}


def cmd_partition(args) -> dict:
    lam = Partition.parse(args.lam)
    out = {
        "lambda": lam.to_text(),
        "size": lam.size(),
        "length": lam.length(),
        "transpose": lam.transpose().to_text(),
        "classes": classify(lam),
    }
    if args.kind:
        kind = Kind.parse(args.kind)
        if is_special(lam, kind):
            out["intervals"] = intervals(lam, kind).to_json()
            out["steps"] = list(step_sequence(lam, kind))
    return out


def cmd_symbol(args) -> dict:
    sym = Symbol.parse(args.symbol)
    out = sym.to_json()
    out["normalized"] = sym.normalize().to_text()
    out["dual"] = dual_symbol(sym).normalize().to_text()
    if sym.defect() in (0, 1):
        out["special"] = is_special_symbol(sym)
        bp = bipartition_of(sym)
        out["bipartition"] = {"alpha": bp.alpha.to_text(), "beta": bp.beta.to_text()}
        out["family_size"] = len(family_members(sym))
    return out


def cmd_dual(args) -> dict:
    kind = Kind.parse(args.kind)
    lam = Partition.parse(args.lam)
    if not is_member(lam, kind):
        raise DomainError(f"{lam} is not in class {kind.value}")
    sp = special_closure(lam, kind)
    dualed = dual_partition(lam, kind)
    out = {
        "input": lam.to_text(),
        "kind": kind.value,
        "sp": sp.to_text(),
        "dual": dualed.to_text(),
        "zeta": list(step_sequence(sp, kind)),
        "checks": {
            "steps_route": dual_via_step_sequence(sp, kind) == dualed,
            "dominance_route": dual_via_dominance(lam, kind) == dualed,
            "involution": dual_of_special(dualed, dual_kind(kind)) == sp,
        },
    }
    return out


def cmd_springer(args) -> dict:
    kind = Kind.parse(args.kind)
    lam = Partition.parse(args.lam)
    eps = SignVector.parse(args.eps or "", kind.orthogonal)
    if not args.eps:
        eps = SignVector.ones(jord_bp(lam, kind), kind.orthogonal)
    datum = springer_symbol(lam, eps, kind)
    out = datum.to_json()
    out["k"] = springer_k(lam, eps, kind)
    out["sp"] = special_closure(lam, kind).to_text()
    return out


def cmd_induce(args) -> dict:
    if args.l1 is not None or args.l2 is not None:
        lam1 = Partition.parse(args.l1 or "0")
        lam2 = Partition.parse(args.l2 or "0")
        data = endoscopic_induce(lam1, lam2)
        return data.to_json()
    if not args.shape or not args.parts:
        raise DomainError("need either --l1/--l2 or --shape with --parts")
    sizes = tuple(int(t) for t in args.shape.split(","))
    shape = LeviShape(sizes[:-1], sizes[-1])
    parts = tuple(Partition.parse(t) for t in args.parts.split(";"))
    if args.cup:
        return {
            "shape": list(sizes),
            "cup": cup(shape, parts).to_text(),
        }
    return {
        "shape": list(sizes),
        "induced": levi_induce(shape, parts).to_text(),
    }


def cmd_decompose(args) -> dict:
    lam = Partition.parse(args.lam)
    tau = _parse_tau(args.tau or "")
    dec = decompose_regular(lam, tau)
    out = dec.to_json()
    out["lambda"] = lam.to_text()
    return out


def cmd_wavefront(args) -> dict:
    lam_p = Partition.parse(args.lp or "0")
    lam_m = Partition.parse(args.lm or "0")
    eps_p = SignVector.parse(args.ep or "")
    eps_m = SignVector.parse(args.em or "")
    if not args.ep:
        eps_p = SignVector.ones(jord_bp(lam_p, Kind.SYMPLECTIC))
    if not args.em:
        eps_m = SignVector.ones(jord_bp(lam_m, Kind.SYMPLECTIC))
    quad = QuadInput(lam_p, eps_p, lam_m, eps_m)
    return wavefront_certificate(quad).to_json()


def cmd_enumerate(args) -> dict:
    n = args.n
    if args.what == "partitions":
        items = [p.to_text() for p in partitions_of(n)]
    elif args.what == "tuples":
        items = [
            "|".join(p.to_text() for p in tup) for tup in partition_tuples(args.k, n)
        ]
    else:
        kind = Kind.parse(args.kind or "symp")
        items = [
            p.to_text()
            for p in enumerate_class(n, kind, special_only=args.what == "special")
        ]
    return {"n": n, "what": args.what, "count": len(items), "items": items}


def cmd_verify(args) -> dict:
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    results = []
    ok = True
    for name in names:
        bound = args.max_n if args.max_n is not None else DEFAULT_BOUNDS[name]
        res = run_suite(name, bound, jobs=args.jobs)
        results.append(res)
        ok = ok and res.ok()
    payload = {
        "ok": ok,
        "suites": [r.to_json() for r in results],
    }
    if not ok:
        raise _VerifyFailure(payload)
    return payload


class _VerifyFailure(Exception):
    def __init__(self, payload):
        super().__init__("verification failed")
        self.payload = payload


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wfcomb",
        description="partition/symbol combinatorics: dualities, induction, wavefront certificates",
    )
    parser.add_argument(
        "--format", choices=("json", "csv", "text"), default="json", help="output format"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="statistics of one partition")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--kind", choices=[k.value for k in Kind])
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("symbol", help="invariants of one symbol")
    p.add_argument("--symbol", required=True, help='text form "X=5,2,0;Y=3,0"')
    p.set_defaults(func=cmd_symbol)

    p = sub.add_parser("dual", help="duality of a class member")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--lambda", dest="lam", required=True)
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("springer", help="symbol of a (partition, signs) pair")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--eps", help='sign vector, e.g. "3=1,1=-1"')
    p.set_defaults(func=cmd_springer)

    p = sub.add_parser("induce", help="Levi or endoscopic induction")
    p.add_argument("--shape", help="comma list n1,..,nt,n0 (last entry is the core)")
    p.add_argument("--parts", help="semicolon list of partitions")
    p.add_argument("--cup", action="store_true", help="doubled union instead of induction")
    p.add_argument("--l1", help="special symplectic factor (endoscopic mode)")
    p.add_argument("--l2", help="special even orthogonal factor (endoscopic mode)")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("decompose", help="invert regular endoscopic induction")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--tau", help='labels, e.g. "2=1,4=0"')
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("wavefront", help="full certificate for one quadruple")
    p.add_argument("--lp", help="plus partition")
    p.add_argument("--ep", help="plus signs")
    p.add_argument("--lm", help="minus partition")
    p.add_argument("--em", help="minus signs")
    p.set_defaults(func=cmd_wavefront)

    p = sub.add_parser("enumerate", help="enumerate partitions or class members")
    p.add_argument("--what", choices=("partitions", "class", "special", "tuples"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2, help="tuple length (tuples mode)")
    p.add_argument("--kind", choices=[k.value for k in Kind])
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run exhaustive verification sweeps")
    p.add_argument("--suite", default="all", choices=["all"] + sorted(SUITES))
    p.add_argument(
        "--max-n",
        type=int,
        default=int(os.environ[ENV_BOUND]) if os.environ.get(ENV_BOUND) else None,
        help=f"size bound (default per suite; {ENV_BOUND} overrides)",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload = args.func(args)
    except _VerifyFailure as exc:
        print(json.dumps(exc.payload, indent=2), file=sys.stderr)
        return 2
    except CertificateError as exc:
        print(
            json.dumps(
                {"error": "CertificateError", "verdict": exc.verdict,
                 "report": exc.report.to_json()},
                indent=2,
            ),
            file=sys.stderr,
        )
        return 2
    except (DomainError, ValueError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return 1
    payload = {"config": _config_echo(args), **payload}
    _emit(payload, args.format)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 oracle resource limit, 3 when
``verify`` finds refuted claims (so CI can gate on consistency). Output is
deterministic: identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .chains import (
    ChainSpec,
    DEFECT_FAMILIES,
    Family,
    LINEAR_FAMILIES,
    build_chain,
    to_edge_list_text,
    to_json_dict,
)
from .genfunc import derived_gf, gf_coefficients, paper_gf
from .graphs import DEFAULT_MAX_VERTICES, OracleLimitError, count_ids
from .polynomials import format_gf, gf_to_json_dict
from .recurrences import eval_recurrence, paper_recurrence, paper_transfer_system, run_transfer
from .verify import (
    DEFAULT_ORACLE_CEILING,
    DEFAULT_SYMBOLIC_MAX,
    check_defect_formula,
    errata_report,
    max_length_within,
    verify_all,
    _gamma_formula,
    _oracle_gamma,
)

_FAMILY_BY_FLAG = {f.value: f for f in Family}


class _Parser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_ceiling_flag(parser, extra_alias: bool = False):
    names = ["--oracle-max-vertices"]
    if extra_alias:
        names.append("--oracle-max")
    parser.add_argument(
        *names,
        type=int,
        default=DEFAULT_ORACLE_CEILING,
        dest="oracle_max_vertices",
        help=f"vertex ceiling for oracle runs (default {DEFAULT_ORACLE_CEILING}, "
        f"hard cap {DEFAULT_MAX_VERTICES})",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cactusids", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    linear_flags = sorted(f.value for f in LINEAR_FAMILIES)
    all_flags = sorted(f.value for f in Family)
    defect_flags = sorted(f.value for f in DEFECT_FAMILIES)

    p = sub.add_parser("count", help="count independent dominating sets")
    p.add_argument("--family", required=True, choices=all_flags)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, help="first arm length (defect families)")
    p.add_argument(
        "--method",
        default="transfer",
        choices=["oracle", "transfer", "recurrence", "gf", "formula"],
    )
    p.add_argument("--gf-source", default="derived", choices=["derived", "paper"])
    p.add_argument("--format", default="text", choices=["text", "json"])
    _add_ceiling_flag(p)

    p = sub.add_parser("sequence", help="print the count sequence up to a length")
    p.add_argument("--family", required=True, choices=linear_flags)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument(
        "--method", default="transfer", choices=["oracle", "transfer", "recurrence", "gf"]
    )
    p.add_argument("--gf-source", default="derived", choices=["derived", "paper"])
    p.add_argument("--format", default="csv", choices=["csv", "json"])
    _add_ceiling_flag(p)

    p = sub.add_parser("gf", help="print a generating function")
    p.add_argument("--family", required=True, choices=linear_flags)
    p.add_argument("--source", default="derived", choices=["derived", "paper"])
    p.add_argument("--format", default="text", choices=["text", "json"])

    p = sub.add_parser("build", help="emit a chain graph as edge list or JSON")
    p.add_argument("--family", required=True, choices=all_flags)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    p.add_argument("--format", default="edges", choices=["edges", "json"])

    p = sub.add_parser("gamma", help="independence domination numbers vs formula")
    p.add_argument(
        "--family", required=True, choices=["tri", "hex-ortho", "hex-meta"]
    )
    p.add_argument("--max-n", type=int)
    p.add_argument("--format", default="table", choices=["table", "json"])
    _add_ceiling_flag(p)

    p = sub.add_parser("defect", help="evaluate a defect formula against the oracle")
    p.add_argument("--family", required=True, choices=defect_flags)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", default="table", choices=["table", "json"])
    _add_ceiling_flag(p)

    p = sub.add_parser("verify", help="run the full claim verification suite")
    p.add_argument("--report", default="markdown", choices=["markdown", "json"])
    p.add_argument(
        "--symbolic-max",
        type=int,
        default=DEFAULT_SYMBOLIC_MAX,
        help="largest length for symbolic (transfer vs recurrence vs gf) checks",
    )
    _add_ceiling_flag(p, extra_alias=True)
    return parser


def _parse_spec(parser, args) -> ChainSpec:
    family = _FAMILY_BY_FLAG[args.family]
    if family in LINEAR_FAMILIES:
        if getattr(args, "m", None) is not None:
            parser.error(f"--m is only valid for defect families, not {args.family}")
        return ChainSpec(family, length=args.n)
    if getattr(args, "m", None) is None:
        parser.error(f"{args.family} requires --m and --n")
    return ChainSpec(family, m=args.m, n=args.n)


def _check_ceiling(args) -> int:
    ceiling = args.oracle_max_vertices
    if ceiling > DEFAULT_MAX_VERTICES:
        raise OracleLimitError(
            f"--oracle-max-vertices {ceiling} exceeds the hard cap {DEFAULT_MAX_VERTICES}"
        )
    return ceiling


def _warn_if_errata(family: Family, method: str, value: int, n: int) -> None:
    expected = run_transfer(paper_transfer_system(family), n)
    if value != expected:
        claim = f"{family.value}-recurrence" if method == "recurrence" else f"{family.value}-gf"
        print(
            f"warning: {method} value {value} differs from the transfer system "
            f"value {expected} at n = {n}; the printed statement is a known "
            f"erratum (claim {claim})",
            file=sys.stderr,
        )


def _linear_count(family: Family, n: int, method: str, gf_source: str, ceiling: int) -> int:
    if method == "oracle":
        chain = build_chain(ChainSpec(family, length=n))
        return count_ids(chain.graph, max_vertices=ceiling)
    if method == "transfer":
        return run_transfer(paper_transfer_system(family), n)
    if method == "recurrence":
        value = eval_recurrence(paper_recurrence(family), n)
        _warn_if_errata(family, "recurrence", value, n)
        return value
    gf = paper_gf(family) if gf_source == "paper" else derived_gf(family)
    value = gf_coefficients(gf, n)[n]
    if gf_source == "paper":
        _warn_if_errata(family, "gf", value, n)
    return value


def _cmd_count(parser, args) -> int:
    spec = _parse_spec(parser, args)
    ceiling = _check_ceiling(args)
    family = spec.family
    if family in LINEAR_FAMILIES:
        if args.method == "formula":
            parser.error("--method formula applies only to defect families")
        if args.n < 1:
            parser.error("--n must be at least 1")
        value = _linear_count(family, args.n, args.method, args.gf_source, ceiling)
    else:
        if args.method not in ("oracle", "formula"):
            parser.error(
                "defect families support --method oracle or formula, "
                f"not {args.method}"
            )
        if args.method == "oracle":
            chain = build_chain(spec)
            value = count_ids(chain.graph, max_vertices=ceiling)
        else:
            from .verify import defect_formula_value

            kind = "ortho-defect" if family is Family.PARA_CHAIN_ORTHO_DEFECT else "para-defect"
            value = defect_formula_value(kind, spec.m, spec.n)
    if args.format == "json":
        doc = {"family": args.family, "method": args.method, "count": value}
        if family in LINEAR_FAMILIES:
            doc["n"] = args.n
            if args.method == "gf":
                doc["gf_source"] = args.gf_source
        else:
            doc["m"], doc["n"] = spec.m, spec.n
        print(json.dumps(doc, indent=2))
    else:
        print(value)
    return 0


def _cmd_sequence(parser, args) -> int:
    family = _FAMILY_BY_FLAG[args.family]
    ceiling = _check_ceiling(args)
    if args.max_n < 1:
        parser.error("--max-n must be at least 1")
    if args.method == "gf":
        gf = paper_gf(family) if args.gf_source == "paper" else derived_gf(family)
        series = gf_coefficients(gf, args.max_n)
        counts = {n: series[n] for n in range(1, args.max_n + 1)}
    else:
        counts = {
            n: _linear_count(family, n, args.method, args.gf_source, ceiling)
            for n in range(1, args.max_n + 1)
        }
    if args.format == "json":
        doc = {
            "family": args.family,
            "method": args.method,
            "counts": [{"n": n, "count": counts[n]} for n in sorted(counts)],
        }
        print(json.dumps(doc, indent=2))
    else:
        print("n,count")
        for n in sorted(counts):
            print(f"{n},{counts[n]}")
    return 0


def _cmd_gf(parser, args) -> int:
    family = _FAMILY_BY_FLAG[args.family]
    gf = paper_gf(family) if args.source == "paper" else derived_gf(family)
    if args.format == "json":
        doc = {"family": args.family, "source": args.source, "text": format_gf(gf)}
        doc.update(gf_to_json_dict(gf))
        print(json.dumps(doc, indent=2))
    else:
        print(format_gf(gf))
    return 0


def _cmd_build(parser, args) -> int:
    spec = _parse_spec(parser, args)
    chain = build_chain(spec)
    if args.format == "json":
        print(json.dumps(to_json_dict(spec, chain), indent=2))
    else:
        print(to_edge_list_text(spec, chain))
    return 0


def _cmd_gamma(parser, args) -> int:
    family = _FAMILY_BY_FLAG[args.family]
    ceiling = _check_ceiling(args)
    limit = max_length_within(family, ceiling)
    max_n = args.max_n if args.max_n is not None else limit
    if max_n < 1:
        parser.error("--max-n must be at least 1")
    if max_n > limit:
        raise OracleLimitError(
            f"gamma at n = {max_n} needs more than {ceiling} vertices"
        )
    rows = []
    for n in range(1, max_n + 1):
        formula = _gamma_formula(family, n)
        oracle = _oracle_gamma(family, n)
        rows.append((n, formula, oracle, formula == oracle))
    if args.format == "json":
        doc = {
            "family": args.family,
            "rows": [
                {"n": n, "formula_value": f, "oracle_value": o, "match": m}
                for n, f, o, m in rows
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        print("n,formula,oracle,match")
        for n, f, o, m in rows:
            print(f"{n},{f},{o},{'yes' if m else 'NO'}")
    return 0


def _cmd_defect(parser, args) -> int:
    family = _FAMILY_BY_FLAG[args.family]
    ceiling = _check_ceiling(args)
    kind = "ortho-defect" if family is Family.PARA_CHAIN_ORTHO_DEFECT else "para-defect"
    if args.m < 1 or args.n < 1:
        parser.error("--m and --n must be at least 1")
    status = check_defect_formula(kind, args.m, args.n, oracle_ceiling=ceiling)
    if args.format == "json":
        print(json.dumps(status.to_json_dict(), indent=2))
    else:
        print(f"kind: {kind}")
        print(f"m: {args.m}")
        print(f"n: {args.n}")
        print(f"formula: {status.claimed_value}")
        print(f"oracle: {status.oracle_value}")
        print(f"verdict: {status.verdict}")
        if status.corrected:
            print(f"corrected: {status.corrected}")
        for note in status.details:
            print(f"note: {note}")
    return 0


def _cmd_verify(parser, args) -> int:
    ceiling = _check_ceiling(args)
    reports = verify_all(oracle_ceiling=ceiling, n_max_symbolic=args.symbolic_max)
    print(errata_report(reports, format=args.report))
    refuted = sum(1 for r in reports for s in r.statuses if s.verdict == "refuted")
    return 3 if refuted else 0


_HANDLERS = {
    "count": _cmd_count,
    "sequence": _cmd_sequence,
    "gf": _cmd_gf,
    "build": _cmd_build,
    "gamma": _cmd_gamma,
    "defect": _cmd_defect,
    "verify": _cmd_verify,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](parser, args)
    except SystemExit as exc:
        # argparse paths: usage errors exit 1 (see _Parser), --help exits 0
        return exc.code if isinstance(exc.code, int) else 1
    except OracleLimitError as exc:
        print(f"cactusids: resource limit: {exc}", file=sys.stderr)
        return 2


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()

"""Command-line surface: group ingestion, reports, bound checks, verification.

Exit codes: 0 success, 1 an asserted check failed, 2 input/usage error.
JSON output is deterministic byte-for-byte for a fixed configuration: keys
are emitted in fixed construction order and rationals are serialized as
numerator/denominator decimal strings. The ``approx`` field on rationals is
a convenience float rendering and is not normative.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cache as cache_mod
from .bounds import (
    BoundCheckResult,
    abelian_prime_index_sd_check,
    cauchy_bound_checks,
    complement_candidates,
    decomposition_bound_check,
    fitting_centralizer_check,
    normal_node_indices,
    sd_rank2_bound_check,
    spd_rank2_bound_check,
)
from .catalog import catalog_groups
from .degrees import DegreeReport, build_degree_report
from .groups import (
    DEFAULT_ORDER_CAP,
    FiniteGroup,
    GroupSpecError,
    OrderCapError,
    centralizer_of_set,
    fitting_subgroup,
    load_group_file,
    make_named,
    prime_signature,
    structural_predicates,
)
from .lattice import (
    DEFAULT_LATTICE_CAP,
    LatticeCapError,
    SubgroupLattice,
    all_subgroups,
    enumerate_subgroups,
    is_modular_lattice,
    is_quasihamiltonian,
    maximal_subgroups,
    normal_subgroups,
    perp,
    selection_meet_join_closed,
    subnormal_subgroups,
    sylow_subgroups,
)
from .moebius import (
    conjectured_mu_symmetric,
    moebius_table,
    mu_matching_bound_check,
    predicted_mu_symmetric,
)
from .verify import run_verification

CLAIM_CHOICES = ("all", "lemma1", "lemma2", "theorem1", "cor26", "cauchy",
                 "lb3", "mu")


@dataclass
class RunConfig:
    group_spec: Optional[str]
    input_path: Optional[str]
    convention: str
    format: str
    max_order: int
    cache_dir: Optional[str]
    stretch: bool
    theorem1_reading: str
    lattice_cap: int = DEFAULT_LATTICE_CAP

    def __post_init__(self):
        if self.max_order < 1:
            raise ValueError("--max-order must be >= 1")
        if self.convention not in ("raw", "closed"):
            raise ValueError("--convention must be raw or closed")
        if self.format not in ("table", "json", "csv"):
            raise ValueError("--format must be table, json or csv")
        if self.theorem1_reading not in ("strict", "relaxed"):
            raise ValueError("--theorem1-reading must be strict or relaxed")


def _config_from_args(args) -> RunConfig:
    return RunConfig(
        group_spec=getattr(args, "group", None),
        input_path=getattr(args, "input", None),
        convention=args.convention,
        format=args.format,
        max_order=args.max_order,
        cache_dir=args.cache,
        stretch=args.stretch,
        theorem1_reading=args.theorem1_reading,
    )


def _resolve_group(config: RunConfig) -> FiniteGroup:
    if config.group_spec and config.input_path:
        raise GroupSpecError("give either --group or --input, not both")
    if config.group_spec:
        return make_named(config.group_spec, max_order=config.max_order)
    if config.input_path:
        return load_group_file(config.input_path, max_order=config.max_order)
    raise GroupSpecError("a group is required: use --group or --input")


def _lattice_for(group: FiniteGroup, config: RunConfig) -> SubgroupLattice:
    if config.cache_dir:
        lat = cache_mod.load_lattice(config.cache_dir, group)
        if lat is not None:
            return lat
        if cache_mod.cache_exists(config.cache_dir, group):
            print(f"warning: ignoring corrupt cache entry for {group.name}",
                  file=sys.stderr)
        lat = enumerate_subgroups(group, config.lattice_cap)
        cache_mod.store_lattice(config.cache_dir, lat)
        return lat
    return enumerate_subgroups(group, config.lattice_cap)


# -- serialization helpers ----------------------------------------------------

def frac_json(value: Optional[Fraction]) -> Optional[dict]:
    if value is None:
        return None
    return {
        "num": str(value.numerator),
        "den": str(value.denominator),
        "approx": format(float(value), ".12g"),
    }


def frac_text(value: Optional[Fraction]) -> str:
    if value is None:
        return "undefined"
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def emit_csv(header: list[str], rows: list[list[str]]) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    sys.stdout.write(buf.getvalue())


def emit_kv_table(pairs: list[tuple[str, str]]) -> None:
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        print(f"{k.ljust(width)}  {v}")


# -- subcommands ---------------------------------------------------------------

def cmd_info(config: RunConfig) -> int:
    g = _resolve_group(config)
    preds = structural_predicates(g)
    fit = fitting_subgroup(g)
    cent = centralizer_of_set(g, fit)
    sig = prime_signature(g.order)
    pairs = [
        ("group", g.name),
        ("order", str(g.order)),
        ("prime divisors", ",".join(str(p) for p in sig.primes) or "-"),
        ("abelian", str(preds.is_abelian).lower()),
        ("nilpotent", str(preds.is_nilpotent).lower()),
        ("solvable", str(preds.is_solvable).lower()),
        ("cyclic", str(g.is_cyclic).lower()),
        ("fitting subgroup order", str(len(fit))),
        ("centralizer of fitting order", str(len(cent))),
        ("index of that centralizer", str(g.order // len(cent))),
    ]
    if config.format == "json":
        emit_json({
            "group": g.name,
            "order": g.order,
            "prime_divisors": list(sig.primes),
            "abelian": preds.is_abelian,
            "nilpotent": preds.is_nilpotent,
            "solvable": preds.is_solvable,
            "cyclic": g.is_cyclic,
            "fitting_order": len(fit),
            "fitting_elements": list(fit.elements()),
            "centralizer_of_fitting_order": len(cent),
            "centralizer_index": g.order // len(cent),
        })
    elif config.format == "csv":
        emit_csv([k for k, _ in pairs], [[v for _, v in pairs]])
    else:
        emit_kv_table(pairs)
    return 0


def _node_flags(lat: SubgroupLattice, convention: str):
    normal = normal_subgroups(lat).members_mask
    subnormal = subnormal_subgroups(lat).members_mask
    sylow = sylow_subgroups(lat).members_mask
    maximal = 0
    if len(lat) > 1:
        maximal = maximal_subgroups(lat, convention).members_mask
    return normal, subnormal, sylow, maximal


def cmd_lattice(config: RunConfig) -> int:
    g = _resolve_group(config)
    lat = _lattice_for(g, config)
    normal, subnormal, sylow, maximal = _node_flags(lat, config.convention)
    pall = perp(lat, all_subgroups(lat))
    diagnostics = {
        "modular": is_modular_lattice(lat),
        "quasihamiltonian": is_quasihamiltonian(lat),
        "perp_of_all_meet_join_closed": selection_meet_join_closed(lat, pall),
        "sylow_subset_of_maximal_raw": len(lat) == 1 or (
            sylow & ~maximal_subgroups(lat, "raw").members_mask == 0),
    }
    rows = []
    for i in range(len(lat)):
        rows.append({
            "index": i,
            "order": lat.node_order(i),
            "elements": list(lat.nodes[i].elements()),
            "normal": bool(normal >> i & 1),
            "subnormal": bool(subnormal >> i & 1),
            "maximal": bool(maximal >> i & 1),
            "sylow": bool(sylow >> i & 1),
        })
    if config.format == "json":
        emit_json({
            "group": g.name,
            "order": g.order,
            "convention": config.convention,
            "node_count": len(lat),
            "diagnostics": diagnostics,
            "nodes": rows,
        })
    elif config.format == "csv":
        emit_csv(
            ["index", "order", "normal", "subnormal", "maximal", "sylow"],
            [[str(r["index"]), str(r["order"]), str(r["normal"]).lower(),
              str(r["subnormal"]).lower(), str(r["maximal"]).lower(),
              str(r["sylow"]).lower()] for r in rows],
        )
    else:
        print(f"{g.name}: {len(lat)} subgroups (convention {config.convention})")
        for key, value in diagnostics.items():
            print(f"  {key}: {str(value).lower()}")
        print(f"{'idx':>4} {'order':>6}  flags")
        for r in rows:
            flags = "".join((
                "n" if r["normal"] else "-",
                "s" if r["subnormal"] else "-",
                "m" if r["maximal"] else "-",
                "y" if r["sylow"] else "-",
            ))
            print(f"{r['index']:>4} {r['order']:>6}  {flags}")
    return 0


def _report_json(report: DegreeReport) -> dict:
    return {
        "group": report.group_name,
        "order": report.order,
        "lattice_size": report.lattice_size,
        "subnormal_count": report.subnormal_count,
        "maximal_raw_count": report.maximal_raw_count,
        "maximal_closed_count": report.maximal_closed_count,
        "sd": frac_json(report.sd),
        "spd": frac_json(report.spd),
        "d": frac_json(report.d),
        "permuting_pair_count": report.permuting_pair_count,
        "quasihamiltonian": report.quasihamiltonian,
        "nilpotent": report.nilpotent,
        "solvable": report.solvable,
        "modular": report.modular,
        "convention": report.convention,
    }


_REPORT_CSV_HEADER = [
    "group", "order", "lattice_size", "subnormal_count", "maximal_raw_count",
    "maximal_closed_count", "sd", "spd", "d", "permuting_pair_count",
    "quasihamiltonian", "nilpotent", "solvable", "modular", "convention",
]


def _report_csv_row(report: DegreeReport) -> list[str]:
    return [
        report.group_name, str(report.order), str(report.lattice_size),
        str(report.subnormal_count),
        "" if report.maximal_raw_count is None else str(report.maximal_raw_count),
        "" if report.maximal_closed_count is None else str(report.maximal_closed_count),
        frac_text(report.sd), frac_text(report.spd), frac_text(report.d),
        str(report.permuting_pair_count),
        str(report.quasihamiltonian).lower(), str(report.nilpotent).lower(),
        str(report.solvable).lower(), str(report.modular).lower(),
        report.convention,
    ]


def _print_report_table(report: DegreeReport) -> None:
    emit_kv_table([
        ("group", report.group_name),
        ("order", str(report.order)),
        ("|L|", str(report.lattice_size)),
        ("|sn|", str(report.subnormal_count)),
        ("|M| raw", str(report.maximal_raw_count)),
        ("|M| closed", str(report.maximal_closed_count)),
        ("sd", frac_text(report.sd)),
        (f"spd ({report.convention})", frac_text(report.spd)),
        ("d", frac_text(report.d)),
        ("permuting pairs", str(report.permuting_pair_count)),
        ("quasihamiltonian", str(report.quasihamiltonian).lower()),
        ("nilpotent", str(report.nilpotent).lower()),
        ("solvable", str(report.solvable).lower()),
        ("modular lattice", str(report.modular).lower()),
    ])


def cmd_degrees(config: RunConfig) -> int:
    g = _resolve_group(config)
    lat = _lattice_for(g, config)
    report = build_degree_report(lat, config.convention)
    if config.format == "json":
        emit_json(_report_json(report))
    elif config.format == "csv":
        emit_csv(_REPORT_CSV_HEADER, [_report_csv_row(report)])
    else:
        _print_report_table(report)
    return 0


def _bound_json(res: BoundCheckResult) -> dict:
    return {
        "claim": res.claim,
        "hypothesis_satisfied": res.hypothesis_satisfied,
        "reasons": list(res.reasons),
        "bound": frac_json(res.bound),
        "actual": frac_json(res.actual),
        "holds": res.holds,
        "slack": frac_json(res.slack),
        "convention": res.convention,
        "context": dict(sorted(res.context.items())),
    }


def _gather_bound_results(config: RunConfig, lat: SubgroupLattice, claim: str,
                          n_node: Optional[int], h_node: Optional[int],
                          ) -> list[BoundCheckResult]:
    conv = config.convention
    rank1 = config.theorem1_reading == "relaxed"
    g = lat.group
    out: list[BoundCheckResult] = []

    def n_indices():
        if n_node is not None:
            return [n_node]
        return [i for i in normal_node_indices(lat)
                if 1 < lat.node_order(i) < g.order]

    def complements(n_idx):
        if h_node is not None:
            return [h_node]
        return complement_candidates(lat, n_idx)

    def factor_partners(n_idx):
        if h_node is not None:
            return [h_node]
        nm = lat.masks[n_idx]
        return [h for h, hm in enumerate(lat.masks)
                if g.product_mask(nm, hm) == g.full_mask]

    if claim in ("lemma1", "all"):
        for n_idx in n_indices():
            for h_idx in complements(n_idx):
                out.append(spd_rank2_bound_check(lat, n_idx, h_idx, conv, rank1))
    if claim in ("lemma2", "all"):
        for n_idx in n_indices():
            out.append(sd_rank2_bound_check(lat, n_idx, rank1))
    if claim in ("cor26", "all"):
        for n_idx in n_indices():
            out.append(abelian_prime_index_sd_check(lat, n_idx))
    if claim in ("cauchy", "all"):
        for n_idx in n_indices():
            for h_idx in factor_partners(n_idx):
                out.extend(cauchy_bound_checks(lat, n_idx, h_idx, conv))
    if claim in ("lb3", "all"):
        for n_idx in n_indices():
            for h_idx in complements(n_idx):
                out.append(decomposition_bound_check(lat, n_idx, h_idx, conv))
    if claim in ("theorem1", "all"):
        check = fitting_centralizer_check(lat, conv, config.theorem1_reading)
        if check.hypotheses:
            out.extend(check.part_i)
            if check.part_ii is not None:
                out.append(check.part_ii)
        else:
            out.append(BoundCheckResult(
                "theorem1", False, check.reasons, None, None, None, None,
                conv, {"group": lat.group.name}))
    if claim in ("mu", "all"):
        out.append(mu_matching_bound_check(lat, conv, config.theorem1_reading))
    return out


def cmd_bounds(config: RunConfig, claim: str, n_node: Optional[int],
               h_node: Optional[int]) -> int:
    g = _resolve_group(config)
    lat = _lattice_for(g, config)
    for idx in (n_node, h_node):
        if idx is not None and not 0 <= idx < len(lat):
            raise GroupSpecError(f"node index {idx} out of range (0..{len(lat) - 1})")
    results = _gather_bound_results(config, lat, claim, n_node, h_node)
    if config.format == "json":
        emit_json({"group": g.name, "results": [_bound_json(r) for r in results]})
    elif config.format == "csv":
        emit_csv(
            ["claim", "hypothesis_satisfied", "bound", "actual", "holds",
             "slack", "convention", "n", "h"],
            [[r.claim, str(r.hypothesis_satisfied).lower(), frac_text(r.bound),
              frac_text(r.actual),
              "" if r.holds is None else str(r.holds).lower(),
              frac_text(r.slack), r.convention,
              r.context.get("n", ""), r.context.get("h", "")]
             for r in results],
        )
    else:
        for r in results:
            if not r.hypothesis_satisfied:
                status = "n/a "
                detail = "; ".join(r.reasons)
            else:
                status = "ok  " if r.holds else "FAIL"
                detail = (f"bound {frac_text(r.bound)} vs actual "
                          f"{frac_text(r.actual)}")
            where = " ".join(f"{k}={v}" for k, v in sorted(r.context.items())
                             if k in ("n", "h", "shape"))
            print(f"{status} {r.claim:<12} {where:<40} {detail}")
        qualifying = sum(r.hypothesis_satisfied for r in results)
        print(f"{len(results)} instances, {qualifying} with hypotheses satisfied")
    failed = any(r.hypothesis_satisfied and not r.holds for r in results)
    return 1 if failed else 0


def cmd_moebius(config: RunConfig) -> int:
    g = _resolve_group(config)
    lat = _lattice_for(g, config)
    mu = moebius_table(lat).bottom_value
    match = re.fullmatch(r"S(\d+)", g.name)
    predicted = predicted_mu_symmetric(int(match.group(1))) if match else None
    conjectured = (conjectured_mu_symmetric(int(match.group(1)))
                   if match and int(match.group(1)) > 1 else None)
    agrees = None if predicted is None else (mu == predicted)
    row = {
        "group": g.name,
        "lattice_size": len(lat),
        "mu_bottom": mu,
        "predicted": predicted,
        "agrees": agrees,
        "conjectured": frac_json(conjectured),
    }
    if config.format == "json":
        emit_json(row)
    elif config.format == "csv":
        emit_csv(["group", "lattice_size", "mu_bottom", "predicted", "agrees",
                  "conjectured"],
                 [[g.name, str(len(lat)), str(mu),
                   "" if predicted is None else str(predicted),
                   "" if agrees is None else str(agrees).lower(),
                   "" if conjectured is None else frac_text(conjectured)]])
    else:
        emit_kv_table([
            ("group", g.name),
            ("|L|", str(len(lat))),
            ("mu(1,G)", str(mu)),
            ("predicted", "-" if predicted is None else str(predicted)),
            ("agrees", "-" if agrees is None else str(agrees).lower()),
            ("conjectured", "-" if conjectured is None else frac_text(conjectured)),
        ])
    return 0


def cmd_batch(config: RunConfig) -> int:
    reports = []
    for g in catalog_groups(max_order=config.max_order):
        lat = _lattice_for(g, config)
        reports.append(build_degree_report(lat, config.convention))
    if config.format == "json":
        emit_json([_report_json(r) for r in reports])
    elif config.format == "csv":
        emit_csv(_REPORT_CSV_HEADER, [_report_csv_row(r) for r in reports])
    else:
        print(f"{'group':<10} {'order':>5} {'|L|':>5} {'sd':>10} {'spd':>10} {'d':>8}")
        for r in reports:
            print(f"{r.group_name:<10} {r.order:>5} {r.lattice_size:>5} "
                  f"{frac_text(r.sd):>10} {frac_text(r.spd):>10} "
                  f"{frac_text(r.d):>8}")
    return 0


def cmd_verify_paper(config: RunConfig) -> int:
    run = run_verification(max_order=config.max_order, stretch=config.stretch,
                           cache_dir=config.cache_dir)
    if config.format == "json":
        emit_json([
            {"name": o.name, "status": o.status, "detail": o.detail,
             "elapsed_seconds": format(o.elapsed, ".3f")}
            for o in run.outcomes
        ])
    else:
        for o in run.outcomes:
            detail = f"  {o.detail}" if o.detail else ""
            print(f"{o.status:<4} {o.name:<32} ({o.elapsed:6.2f}s){detail}")
        passed = sum(o.status == "PASS" for o in run.outcomes)
        failed = sum(o.status == "FAIL" for o in run.outcomes)
        skipped = sum(o.status == "SKIP" for o in run.outcomes)
        print(f"{passed} passed, {failed} failed, {skipped} skipped")
    return 0 if run.all_ok else 1


# -- parser --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="group descriptor, e.g. S4, D6, Z:2,4, S3xC5")
    common.add_argument("--input", help="JSON group file (cayley/permutation/named)")
    common.add_argument("--convention", choices=("raw", "closed"), default="raw",
                        help="maximal-subgroup convention (default raw)")
    common.add_argument("--format", choices=("table", "json", "csv"),
                        default="table")
    common.add_argument("--max-order", type=int, default=DEFAULT_ORDER_CAP,
                        help=f"order cap (default {DEFAULT_ORDER_CAP})")
    common.add_argument("--cache", metavar="DIR", dest="cache",
                        help="lattice cache directory")
    common.add_argument("--stretch", action="store_true",
                        help="include the S6 stretch check in verify-paper")
    common.add_argument("--theorem1-reading", choices=("strict", "relaxed"),
                        default="strict",
                        help="whether a cyclic Fitting-centralizer qualifies "
                             "for the rank-2 bounds (default strict)")

    parser = argparse.ArgumentParser(
        prog="permlat",
        description="Exact subgroup-lattice permutability degrees and bounds "
                    "for finite groups.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common],
                   help="order, prime divisors, structure flags, Fitting data")
    sub.add_parser("lattice", parents=[common],
                   help="enumerate the subgroup lattice and node flags")
    sub.add_parser("degrees", parents=[common],
                   help="exact sd / spd / d report for one group")
    bounds_p = sub.add_parser("bounds", parents=[common],
                              help="run lower-bound checks (gate-and-report)")
    bounds_p.add_argument("--claim", choices=CLAIM_CHOICES, default="all",
                          help="which bound family to check (default all)")
    bounds_p.add_argument("--n-node", type=int, default=None,
                          help="lattice index of the normal subgroup N")
    bounds_p.add_argument("--h-node", type=int, default=None,
                          help="lattice index of the factor H")
    sub.add_parser("moebius", parents=[common],
                   help="bottom Moebius number, with symmetric-group predictions")
    sub.add_parser("batch", parents=[common],
                   help="degree reports for every built-in catalog group")
    sub.add_parser("verify-paper", parents=[common],
                   help="run the whole claim-verification suite on the catalog")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from_args(args)
        if args.command == "info":
            return cmd_info(config)
        if args.command == "lattice":
            return cmd_lattice(config)
        if args.command == "degrees":
            return cmd_degrees(config)
        if args.command == "bounds":
            return cmd_bounds(config, args.claim, args.n_node, args.h_node)
        if args.command == "moebius":
            return cmd_moebius(config)
        if args.command == "batch":
            return cmd_batch(config)
        if args.command == "verify-paper":
            return cmd_verify_paper(config)
        parser.error(f"unknown command {args.command}")
    except (GroupSpecError, OrderCapError, LatticeCapError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())

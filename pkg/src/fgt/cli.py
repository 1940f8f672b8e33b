"""Command-line front end: build groups, inspect predicates, export lattices, run claims.

Exit codes: 0 success (and all checked claims pass), 1 at least one asserted
claim failed, 2 usage error or unknown spec, 3 budget exceeded with no
partial result.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import GroupSpec, build_group, parse_spec, standard_catalog
from .claims import claim_registry, counterexample_search, emit_report, run_all_claims, run_claim
from .config import MAX_ORDER_CAP, Budget, CliConfig
from .errors import BudgetExceededError, FgtError, UnknownClaimError, UnknownConstructorError
from .groups import order_fingerprint
from .lattice import (
    all_subgroups,
    is_normal,
    is_subnormal,
    lattice_to_dot,
    lattice_to_json,
    subgroup_from_generators,
)
from .predicates import (
    classify_group,
    is_abelian,
    is_dedekind,
    is_h_subgroup,
    is_metabelian,
    is_nc_subgroup,
    is_ne_subgroup,
    is_nilpotent,
    is_normally_embedded,
    is_nsn_group,
    is_on_group,
    is_pe_group,
    is_pnc_group,
    is_pronormal,
    is_simple,
    is_solvable,
    is_supersolvable,
    is_t_group,
)

GROUP_PREDICATES = {
    "is_pnc": is_pnc_group,
    "is_pe": is_pe_group,
    "is_on": is_on_group,
    "is_nsn": is_nsn_group,
    "is_dedekind": is_dedekind,
    "is_t_group": is_t_group,
    "is_supersolvable": is_supersolvable,
    "is_solvable": lambda g, budget: is_solvable(g),
    "is_nilpotent": lambda g, budget: is_nilpotent(g, budget)[0],
    "is_metabelian": lambda g, budget: is_metabelian(g),
    "is_abelian": lambda g, budget: is_abelian(g),
    "is_simple": is_simple,
}

SUBGROUP_PREDICATES = {
    "is_nc": lambda g, h, budget: is_nc_subgroup(g, h),
    "is_ne": lambda g, h, budget: is_ne_subgroup(g, h),
    "is_h": lambda g, h, budget: is_h_subgroup(g, h),
    "is_pronormal": lambda g, h, budget: is_pronormal(g, h),
    "is_normally_embedded": is_normally_embedded,
    "is_subnormal": lambda g, h, budget: is_subnormal(g, h),
    "is_normal": lambda g, h, budget: is_normal(g, h),
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order-cap", type=int, default=None,
                        help=f"maximum group order (hard limit {MAX_ORDER_CAP}; env FGT_ORDER_CAP)")
    common.add_argument("--max-subgroups", type=int, default=None, help="lattice subgroup budget")
    common.add_argument("--max-joins", type=int, default=None, help="lattice join-attempt budget")
    common.add_argument("--parallelism", type=int, default=1, help="claim fan-out workers")

    parser = argparse.ArgumentParser(prog="fgt", description=__doc__, parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="catalog operations", parents=[common])
    cat_sub = cat.add_subparsers(dest="catalog_command", required=True)
    cat_sub.add_parser("list", help="list all catalog GroupSpecs with orders", parents=[common])

    info = sub.add_parser("group", help="group operations", parents=[common])
    info_sub = info.add_subparsers(dest="group_command", required=True)
    info_cmd = info_sub.add_parser("info", help="order profile and predicate profile", parents=[common])
    info_cmd.add_argument("spec")

    lat = sub.add_parser("lattice", help="export the subgroup lattice", parents=[common])
    lat.add_argument("spec")
    fmt = lat.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true", default=True)
    fmt.add_argument("--dot", action="store_true")

    pred = sub.add_parser("predicate", help="evaluate one predicate", parents=[common])
    pred.add_argument("name")
    pred.add_argument("spec")
    pred.add_argument("--subgroup", help="comma-separated generator indices of the subgroup")

    check = sub.add_parser("check", help="run claims", parents=[common])
    check.add_argument("claim", nargs="?", help="claim id (omit with --all)")
    check.add_argument("--all", action="store_true", help="run every registered claim")
    check.add_argument("--report", help="also write the JSON report to this path")
    check.add_argument("--json", action="store_true", help="print JSON instead of the table")

    search = sub.add_parser("search", help="search for groups satisfying a predicate expression", parents=[common])
    search.add_argument("expr", help="boolean expression over profile flags, e.g. 'pnc and not dedekind'")
    search.add_argument("--universe", default="catalog",
                        help="comma-separated specs, ranges like Dihedral(3..20), or 'catalog'")
    return parser


def _config_from_args(args) -> CliConfig:
    defaults = Budget()
    budget = Budget(
        order_cap=args.order_cap if args.order_cap is not None else defaults.order_cap,
        max_subgroups=args.max_subgroups if args.max_subgroups is not None else defaults.max_subgroups,
        max_join_attempts=args.max_joins if args.max_joins is not None else defaults.max_join_attempts,
    )
    return CliConfig(budget=budget, parallelism=args.parallelism)


def _parse_universe(text: str) -> list[GroupSpec]:
    specs: list[GroupSpec] = []
    depth = 0
    item = ""
    items = []
    for ch in text:
        if ch == "," and depth == 0:
            items.append(item)
            item = ""
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        item += ch
    if item:
        items.append(item)
    for raw in items:
        raw = raw.strip()
        if raw == "catalog":
            specs.extend(standard_catalog())
            continue
        if ".." in raw and raw.endswith(")") and "(" in raw:
            name, _, inner = raw.partition("(")
            lo, _, hi = inner[:-1].partition("..")
            for n in range(int(lo), int(hi) + 1):
                specs.append(GroupSpec(name.strip(), (n,)))
            continue
        specs.append(parse_spec(raw))
    return specs


def _cmd_catalog_list(args, budget: Budget) -> int:
    for spec in standard_catalog():
        g = build_group(spec, budget)
        sys.stdout.write(f"{spec.to_string()}\t{g.order}\t{g.label}\n")
    return 0


def _cmd_group_info(args, budget: Budget) -> int:
    g = build_group(parse_spec(args.spec), budget)
    profile = classify_group(g, budget)
    doc = {
        "spec": args.spec,
        "label": g.label,
        "orderProfile": order_fingerprint(g).to_json(),
        "predicates": profile.to_json(),
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def _cmd_lattice(args, budget: Budget) -> int:
    g = build_group(parse_spec(args.spec), budget)
    lattice = all_subgroups(g, budget)
    if args.dot:
        sys.stdout.write(lattice_to_dot(lattice))
    else:
        sys.stdout.write(lattice_to_json(lattice) + "\n")
    return 0


def _cmd_predicate(args, budget: Budget) -> int:
    g = build_group(parse_spec(args.spec), budget)
    if args.name in GROUP_PREDICATES:
        if args.subgroup:
            raise UnknownClaimError(f"{args.name} is a group predicate; --subgroup not allowed")
        value = GROUP_PREDICATES[args.name](g, budget)
    elif args.name in SUBGROUP_PREDICATES:
        if not args.subgroup:
            raise UnknownClaimError(f"{args.name} needs --subgroup with generator indices")
        gens = [int(x) for x in args.subgroup.split(",")]
        if any(not 0 <= x < g.order for x in gens):
            raise UnknownConstructorError(f"subgroup generator index out of range for order {g.order}")
        h = subgroup_from_generators(g, gens)
        value = SUBGROUP_PREDICATES[args.name](g, h, budget)
    else:
        known = ", ".join(sorted(GROUP_PREDICATES) + sorted(SUBGROUP_PREDICATES))
        raise UnknownClaimError(f"unknown predicate {args.name!r}; known: {known}")
    sys.stdout.write(("true" if value else "false") + "\n")
    return 0


def _cmd_check(args, config: CliConfig) -> int:
    budget = config.budget
    if args.all:
        results = run_all_claims(budget, parallelism=config.parallelism)
    elif args.claim:
        results = [run_claim(args.claim, budget)]
    else:
        raise UnknownClaimError("check needs a claim id or --all")
    report = emit_report(results, "json")
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(report)
    sys.stdout.write(report if args.json else emit_report(results, "markdown"))
    expectations = {c.id: c.expectation for c in claim_registry()}
    failed = any(
        r.verdict == "fail" and expectations[r.claim_id] in ("mustHold", "iff") for r in results
    )
    return 1 if failed else 0


def _cmd_search(args, budget: Budget) -> int:
    universe = _parse_universe(args.universe)
    matches, skipped = counterexample_search(args.expr, universe, budget)
    doc = {
        "expression": args.expr,
        "matches": [m.to_string() for m in matches],
        "skipped": skipped,
    }
    sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        config = _config_from_args(args)
        budget = config.budget
        if args.command == "catalog":
            return _cmd_catalog_list(args, budget)
        if args.command == "group":
            return _cmd_group_info(args, budget)
        if args.command == "lattice":
            return _cmd_lattice(args, budget)
        if args.command == "predicate":
            return _cmd_predicate(args, budget)
        if args.command == "check":
            return _cmd_check(args, config)
        if args.command == "search":
            return _cmd_search(args, budget)
        parser.print_usage(sys.stderr)
        return 2
    except BudgetExceededError as e:
        sys.stderr.write(f"budget exceeded: {e}\n")
        return 3
    except (UnknownConstructorError, UnknownClaimError, ValueError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2
    except FgtError as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

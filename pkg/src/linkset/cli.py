"""Command-line entry point.

Exit codes follow the grep convention: 0 when the requested object was
found or verified, 1 when verification fails or a search confirms absence
(the expected outcome of the ``nonexist`` subcommands), 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from . import io as lio
from .bent import BooleanFunction, is_bent_set, kerdock_bent_set
from .diffmat import (
    build_general,
    build_improved,
    build_nonreversible,
    build_tyken,
    dm_auto,
)
from .groups import abelian_rank, center, exponent, group_from_spec, make_abelian
from .linking import reversibility_profile
from .search import census_systems, mcfarland_pair_sweep, spence_pair_sweep


def _parse_group(text: str):
    try:
        spec = json.loads(text)
    except json.JSONDecodeError:
        spec = text.strip('"')
    return group_from_spec(spec)


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _payload_of(obj: dict) -> dict:
    return obj["payload"] if "payload" in obj and "kind" in obj else obj


def _write_out(args, obj: dict) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(obj, fh, indent=2, sort_keys=True)
            fh.write("\n")


def _cmd_group(args) -> int:
    G = _parse_group(args.group)
    info = {
        "spec": G.spec,
        "order": G.order,
        "abelian": G.abelian,
        "exponent": exponent(G),
        "center_order": center(G).order,
    }
    if G.abelian:
        info["rank"] = abelian_rank(G)
    _emit(args, info, [f"{k}: {v}" for k, v in info.items()])
    return 0


def _cmd_ds_verify(args) -> int:
    obj = _payload_of(_load_json(args.file))
    try:
        record = lio.record_from_json(obj)
    except ValueError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    _emit(args, lio.record_to_json(record),
          [f"difference set with parameters {record.params.as_tuple()}"])
    return 0


def _cmd_link_verify(args) -> int:
    obj = _payload_of(_load_json(args.file))
    try:
        system = lio.system_from_json(obj)
    except ValueError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    profile = reversibility_profile(system)
    _emit(args, lio.system_to_json(system),
          [f"reduced {system.params.as_tuple()} linking system of size {system.size}",
           f"(mu, nu) = {system.munu.as_tuple()}",
           f"reversibility profile: {profile}"])
    return 0


def _cmd_dm_construct(args) -> int:
    G = _parse_group(args.group)
    M = dm_auto(G, args.rows)
    if M is None:
        print("no difference matrix found within budget", file=sys.stderr)
        return 1
    cert = lio.certificate("difference-matrix", lio.dm_to_json(M), {"rows": args.rows})
    _write_out(args, cert)
    _emit(args, cert, [f"({G.spec}, {M.num_rows}, 1)-difference matrix; verified"])
    return 0


def _cmd_dm_verify(args) -> int:
    obj = _payload_of(_load_json(args.file))
    try:
        M = lio.dm_from_json(obj)
    except ValueError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return 1
    _emit(args, lio.dm_to_json(M),
          [f"verified ({M.group.spec}, {M.num_rows}, {M.lam})-difference matrix"])
    return 0


def _cmd_bent_kerdock(args) -> int:
    fns = kerdock_bent_set(args.d)
    payload = {"arity": fns[0].arity, "tables": [f.to_hex() for f in fns]}
    cert = lio.certificate("bent-set", payload, {"d": args.d})
    _write_out(args, cert)
    _emit(args, cert, [f"verified bent set of size {len(fns)} on arity {fns[0].arity}"])
    return 0


def _cmd_bent_verify(args) -> int:
    obj = _payload_of(_load_json(args.file))
    fns = [BooleanFunction.from_hex(obj["arity"], h) for h in obj["tables"]]
    if not is_bent_set(fns):
        print("verification failed: not a bent set", file=sys.stderr)
        return 1
    _emit(args, {"arity": obj["arity"], "size": len(fns), "bent_set": True},
          [f"verified bent set of size {len(fns)}"])
    return 0


def _cmd_build(args) -> int:
    if args.family in ("general", "improved") and not args.group:
        print("error: --group is required for this family", file=sys.stderr)
        return 2
    if args.family in ("tyken", "nonrev") and args.d is None:
        print("error: -d is required for this family", file=sys.stderr)
        return 2
    if args.family == "tyken" and not args.group:
        print("error: --group (the abelian factor K) is required for tyken", file=sys.stderr)
        return 2
    if args.family == "general":
        system = build_general(_parse_group(args.group))
    elif args.family == "improved":
        system = build_improved(_parse_group(args.group))
    elif args.family == "tyken":
        system = build_tyken(args.d, _parse_group(args.group))
    elif args.family == "nonrev":
        system = build_nonreversible(args.d)
    else:  # pragma: no cover - argparse restricts choices
        raise AssertionError
    cert = lio.certificate("linking-system", lio.system_to_json(system),
                           {"family": args.family})
    _write_out(args, cert)
    _emit(args, cert,
          [f"verified reduced {system.params.as_tuple()} linking system of size {system.size}",
           f"reversibility profile: {reversibility_profile(system)}"])
    return 0


def _cmd_census(args) -> int:
    if args.target != "z42":
        raise SystemExit(2)
    G = make_abelian([4, 4])
    result = census_systems(G, 6, 3, jobs=args.jobs)
    payload = lio.census_payload(G, result.systems, result.max_size,
                                 result.runtime_seconds)
    cert = lio.certificate("census-report", payload, {"target": "z42"})
    _write_out(args, cert)
    _emit(args, cert,
          [f"size-3 reduced linking systems in Z4^2: {result.count}",
           f"maximum system size: {result.max_size}",
           f"digest: {payload['digest']}",
           f"runtime: {result.runtime_seconds:.1f}s"])
    return 0 if result.count else 1


def _cmd_nonexist(args) -> int:
    mode = "full" if args.full else "pruned"
    reports = []
    if args.target == "z8z2":
        start = time.time()
        G = make_abelian([8, 2])
        result = census_systems(G, 6, 2, jobs=args.jobs)
        payload = {
            "group": G.spec,
            "difference_sets": len(result.graph.records),
            "size2_systems": result.count,
            "max_system_size": result.max_size,
            "runtime_seconds": time.time() - start,
        }
        empty = result.count == 0
        cert = lio.certificate("nonexistence-report", payload, {"target": args.target})
        _write_out(args, cert)
        _emit(args, cert,
              [f"difference sets found: {payload['difference_sets']}",
               f"size-2 systems: {result.count} (expected 0)"])
        return 1 if empty else 0
    if args.target == "mcfarland-q3":
        groups = [args.group] if args.group else ['{"abelian": [3, 3, 5]}']
        sweep = mcfarland_pair_sweep
    elif args.target == "spence-d1":
        groups = ([args.group] if args.group
                  else ['{"abelian": [3, 3, 2, 2]}', '{"abelian": [3, 3, 4]}'])
        sweep = spence_pair_sweep
    else:  # pragma: no cover
        raise SystemExit(2)
    all_empty = True
    for gtext in groups:
        report = sweep(_parse_group(gtext), mode=mode)
        reports.append(report)
        all_empty &= report.all_pairs_fail
    payload = {"reports": [vars(r) | {"group_spec": r.group_spec} for r in reports]}
    cert = lio.certificate("nonexistence-report", payload, {"target": args.target, "mode": mode})
    _write_out(args, cert)
    lines = [f"{r.family} over {r.group_spec}: {r.linked_pairs} linked pairs "
             f"of {r.pairs_tested} tested ({r.mode})" for r in reports]
    _emit(args, cert, lines)
    return 1 if all_empty else 0


def _cmd_selftest(args) -> int:
    from .selftest import run_selftest

    ok = run_selftest(verbose=True)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linkset",
        description="Constructions, verification, and exhaustive search for "
                    "linking systems of difference sets in finite groups.",
    )
    parser.add_argument("--version", action="version",
                        version=f"linkset {__version__} (format {lio.FORMAT_VERSION})")
    parser.add_argument("--output", choices=["text", "json"], default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="inspect a group spec")
    p.add_argument("group", help='e.g. \'{"abelian": [4, 4]}\' or "D4"')
    p.set_defaults(func=_cmd_group)

    p = sub.add_parser("ds", help="difference-set records")
    ds_sub = p.add_subparsers(dest="subcommand", required=True)
    q = ds_sub.add_parser("verify")
    q.add_argument("file")
    q.set_defaults(func=_cmd_ds_verify)

    p = sub.add_parser("link", help="linking-system certificates")
    link_sub = p.add_subparsers(dest="subcommand", required=True)
    q = link_sub.add_parser("verify-reduced")
    q.add_argument("file")
    q.set_defaults(func=_cmd_link_verify)

    p = sub.add_parser("dm", help="difference matrices")
    dm_sub = p.add_subparsers(dest="subcommand", required=True)
    q = dm_sub.add_parser("construct")
    q.add_argument("--group", required=True)
    q.add_argument("--rows", type=int, required=True)
    q.add_argument("--out")
    q.set_defaults(func=_cmd_dm_construct)
    q = dm_sub.add_parser("verify")
    q.add_argument("file")
    q.set_defaults(func=_cmd_dm_verify)

    p = sub.add_parser("bent", help="bent sets")
    bent_sub = p.add_subparsers(dest="subcommand", required=True)
    q = bent_sub.add_parser("kerdock")
    q.add_argument("-d", type=int, required=True)
    q.add_argument("--out")
    q.set_defaults(func=_cmd_bent_kerdock)
    q = bent_sub.add_parser("verify")
    q.add_argument("file")
    q.set_defaults(func=_cmd_bent_verify)

    p = sub.add_parser("build", help="construct a linking system")
    p.add_argument("family", choices=["general", "improved", "tyken", "nonrev"])
    p.add_argument("--group", help="target group (or K for tyken)")
    p.add_argument("-d", type=int, help="depth parameter for tyken/nonrev")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_build)

    default_jobs = int(os.environ.get("LINKSET_JOBS", "1"))

    p = sub.add_parser("census", help="exhaustive linking-system census")
    p.add_argument("target", choices=["z42"])
    p.add_argument("--jobs", type=int, default=default_jobs)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("nonexist", help="nonexistence sweeps (exit 1 = confirmed empty)")
    p.add_argument("target", choices=["z8z2", "mcfarland-q3", "spence-d1"])
    p.add_argument("--group")
    p.add_argument("--jobs", type=int, default=default_jobs)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--full", action="store_true")
    grp.add_argument("--pruned", action="store_true", default=True)
    p.add_argument("--out")
    p.set_defaults(func=_cmd_nonexist)

    p = sub.add_parser("selftest", help="run the worked examples end to end")
    p.set_defaults(func=_cmd_selftest)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end (``staropen``)."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Callable, Sequence

from . import census
from .checks import CHECKS_BY_ID
from .harness import (
    DEFAULT_MAX_POINTS,
    default_jobs,
    replay,
    run_lemma_suite,
    search_counterexample,
    suite_exit_code,
)
from .maps import classify
from .properties import (
    connected_components,
    is_connected,
    is_hausdorff,
    is_locally_connected,
)
from .regular import (
    analyze,
    is_regular_closed,
    is_regular_open,
    is_star_closed,
    is_star_open,
    star_closure,
    star_interior,
)
from .searches import SEARCHES_BY_ID
from .space import Space, closure, interior, is_closed, is_open
from .spacefile import (
    SpaceFileError,
    dump_witness,
    load_space_file,
    map_from_assign,
    parse_set,
    parse_witness,
    resolve_space,
)
from .witness import WitnessReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SET_OPS: dict[str, Callable[[Space, int], int]] = {
    "int": interior,
    "cl": closure,
    "star-int": star_interior,
    "star-cl": star_closure,
}
PREDICATES: dict[str, Callable[[Space, int], bool]] = {
    "open?": is_open,
    "closed?": is_closed,
    "reg-open?": is_regular_open,
    "reg-closed?": is_regular_closed,
    "star-open?": is_star_open,
    "star-closed?": is_star_closed,
}


class UsageError(Exception):
    pass


def _family(s: Space, family) -> str:
    return " ".join(s.format(a) for a in family)


def _bool(v: bool) -> str:
    return "true" if v else "false"


def _load(ref: str) -> Space:
    return resolve_space(ref)


def _set_arg(s: Space, text: str | None) -> int:
    if text is None:
        raise UsageError("--set is required")
    labels = [t.strip() for t in text.split(",") if t.strip()]
    return parse_set(s, labels)


def cmd_analyze(args) -> int:
    s = _load(args.space)
    info = analyze(s)
    print(f"points: {s.n}")
    print(f"opens: {len(s.opens)}")
    print(f"topology: {_family(s, s.opens)}")
    print(f"regular opens: {_family(s, info.regular_opens)}")
    print(f"star opens: {_family(s, info.star_topology.opens)}")
    print(f"semi-regular: {_bool(info.semi_regular)}")
    print(f"connected: {_bool(is_connected(s))}")
    print(f"locally connected: {_bool(is_locally_connected(s))}")
    print(f"hausdorff: {_bool(is_hausdorff(s))}")
    print(f"components: {_family(s, connected_components(s))}")
    return EXIT_OK


def cmd_op(args) -> int:
    s = _load(args.space)
    a = _set_arg(s, args.set)
    if args.name in SET_OPS:
        print(s.format(SET_OPS[args.name](s, a)))
    else:
        print(_bool(PREDICATES[args.name](s, a)))
    return EXIT_OK


def _parse_assign(text: str):
    items = [t.strip() for t in text.split(",") if t.strip()]
    if all(":" in t for t in items):
        return dict(t.split(":", 1) for t in items)
    return items


def cmd_map_check(args) -> int:
    if args.space is not None:
        if args.map_index is None:
            raise UsageError("--space needs --map-index")
        doc = load_space_file(args.space)
        if not 0 <= args.map_index < len(doc.maps):
            raise UsageError(f"map index {args.map_index} out of range ({len(doc.maps)} maps)")
        f = doc.maps[args.map_index]
    else:
        if args.source is None or args.target is None or args.assign is None:
            raise UsageError("give --space/--map-index or --from/--to/--assign")
        f = map_from_assign(_load(args.source), _load(args.target), _parse_assign(args.assign))
    c = classify(f)
    print(f"continuous: {_bool(c.continuous)}")
    print(f"open: {_bool(c.open_map)}")
    print(f"almost-continuous: {_bool(c.almost_continuous)}")
    print(f"star-continuous: {_bool(c.star_continuous)}")
    return EXIT_OK


def _write_witness(report: WitnessReport, directory: str | None) -> str | None:
    if directory is None or not report.has_witness or report.witness is None:
        return None
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    name = f"{report.check_id}.json"
    (out / name).write_text(dump_witness(report.check_id, report.status, report.witness))
    return name


def cmd_lemmas(args) -> int:
    ids = None
    if args.checks:
        ids = [c.strip() for c in args.checks.split(",") if c.strip()]
        unknown = [c for c in ids if c not in CHECKS_BY_ID]
        if unknown:
            raise UsageError(f"unknown check id {unknown[0]!r}")
    jobs = args.jobs if args.jobs is not None else default_jobs()
    reports = run_lemma_suite(args.max_points, ids, jobs=jobs)
    lines = []
    for r in reports:
        lines.append(r.line(_write_witness(r, args.witness_dir)))
        print(lines[-1])
        tag = " (empirical)" if r.empirical else ""
        print(f"  {CHECKS_BY_ID[r.check_id].title}{tag}")
        if r.witness is not None:
            print(f"  witness: {r.witness.describe()}")
    if args.report:
        Path(args.report).write_text("\n".join(lines) + "\n")
    failed = [r.check_id for r in reports if r.status == "fail" and not r.empirical]
    print(f"# {len(reports)} checks, {len(failed)} asserted failures")
    return suite_exit_code(reports)


def cmd_search(args) -> int:
    if args.witness_id not in SEARCHES_BY_ID:
        raise UsageError(f"unknown witness id {args.witness_id!r}")
    r = search_counterexample(args.witness_id, args.max_points)
    print(r.line(_write_witness(r, args.out)))
    print(f"  {SEARCHES_BY_ID[r.check_id].title}; scanned carriers up to {r.bound}")
    if r.witness is not None:
        print(f"  carrier: {r.witness.carrier_size}")
        print(f"  witness: {r.witness.describe()}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    try:
        spaces = census.enumerate_topologies(args.points).spaces
    except census.CapExceeded as e:
        raise UsageError(str(e)) from None
    if args.up_to_iso:
        spaces = census.up_to_isomorphism(spaces)
    if args.count_only:
        print(len(spaces))
        return EXIT_OK
    for s in spaces:
        print(_family(s, s.opens))
    print(f"# {len(spaces)} topologies on {args.points} points")
    return EXIT_OK


def cmd_replay(args) -> int:
    check_id, recorded, witness = parse_witness(Path(args.witness_file).read_text())
    if check_id not in CHECKS_BY_ID and check_id not in SEARCHES_BY_ID:
        raise UsageError(f"unknown check id {check_id!r}")
    status = replay(check_id, witness)
    print(f"REPLAY {check_id} recorded={recorded} replayed={status}")
    return EXIT_OK if status == recorded else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="staropen", description="Star-open sets on finite spaces.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="summarize a space")
    a.add_argument("space", help="space file or built-in name (e.g. sierpinski, t3, discrete-3)")
    a.set_defaults(func=cmd_analyze)

    o = sub.add_parser("op", help="apply an operator or predicate to a set")
    o.add_argument("name", choices=list(SET_OPS) + list(PREDICATES))
    o.add_argument("--space", required=True)
    o.add_argument("--set", help="comma-separated point labels")
    o.set_defaults(func=cmd_op)

    m = sub.add_parser("map", help="map classification")
    msub = m.add_subparsers(dest="map_command", required=True)
    mc = msub.add_parser("check", help="classify a map")
    mc.add_argument("--space", help="space file whose 'maps' list holds the map")
    mc.add_argument("--map-index", type=int)
    mc.add_argument("--from", dest="source")
    mc.add_argument("--to", dest="target")
    mc.add_argument("--assign", help="'a:x,b:y' or codomain labels in domain order")
    mc.set_defaults(func=cmd_map_check)

    lm = sub.add_parser("lemmas", help="run the lemma suite")
    lm.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    lm.add_argument("--checks", help="comma-separated check ids")
    lm.add_argument("--jobs", type=int, help="worker processes (default: CPU count)")
    lm.add_argument("--witness-dir", help="write witness files here")
    lm.add_argument("--report", help="write the machine-readable lines to this file")
    lm.set_defaults(func=cmd_lemmas)

    s = sub.add_parser("search", help="search for a finite counterexample")
    s.add_argument("witness_id")
    s.add_argument("--max-points", type=int, default=DEFAULT_MAX_POINTS)
    s.add_argument("--out", default=".", help="directory for the witness file")
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("enumerate", help="census of topologies")
    e.add_argument("--points", type=int, required=True)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--up-to-iso", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    r = sub.add_parser("replay", help="re-evaluate a witness file")
    r.add_argument("witness_file")
    r.set_defaults(func=cmd_replay)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"staropen: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (SpaceFileError, OSError) as e:
        print(f"staropen: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command-line frontend.

Four subcommands tie the library together:

* ``torus``    — exact ratio search and crossing checks on a flat torus;
* ``cylinder`` — winding-window-versus-oracle sweep on one hyperbolic
  cylinder, optionally on explicit arc pairs from a JSON file;
* ``bounds``   — bound and profile tables over a systole grid;
* ``verify``   — the full verification suites.

Reports are JSON (or CSV for the tabular sweeps) with the fixed top-level
shape {command, inputs, results, violations, timing_ms, version}.  A
fixed seed makes the report byte-identical across runs: wall-clock timing
is therefore printed to stderr only and serialized as null.  Exit status:
0 on success, 1 when any violation was found, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from typing import Optional

from . import __version__
from .bounds import asymptotic_profile, parse_grid
from .cylinder import ArcSpec, count_crossings_cyl, intersection_bounds, \
    make_collar
from .errors import DomainError, GeometryError, RetrySignal
from .flat_torus import Lattice, RealClass, best_ratio_search, k_real, \
    norm_comparison_report, segment_bound_check, systole, torus_diameter
from .seeding import named_stream
from .suites import lemma_sweep, run_suites

_PROFILE_COLUMNS = ("l1", "hyp_lower", "hyp_upper", "collar_rate",
                    "lower_profile", "upper_profile",
                    "lower_profile_tail", "upper_profile_tail")

_RECORD_COLUMNS = ("c_wind", "d_wind", "same_side", "entry_1", "entry_2",
                   "first_sign", "count", "window_lo", "window_hi",
                   "expected_sign", "signs", "ok")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0,
                        help="seed for every random stream (default 0)")
    common.add_argument("--precision", choices=("double", "extended"),
                        default="double",
                        help="extended re-evaluates bound formulas in "
                             "50-digit arithmetic")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"),
                        default="json",
                        help="csv is available for the tabular sweeps "
                             "(bounds, cylinder)")
    common.add_argument("--output", default=None,
                        help="write the report to this path instead of "
                             "stdout")

    parser = argparse.ArgumentParser(
        prog="intnorm",
        description="Intersection-to-length ratios: exact flat-torus "
                    "searches, hyperbolic cylinder crossing oracles, and "
                    "closed-form bound tables.")
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    t = sub.add_parser("torus", parents=[common],
                       help="ratio search and crossing checks on a flat "
                            "torus")
    t.add_argument("--lattice", required=True, metavar="A,B,C,D",
                   help="basis vectors e1=(A,B), e2=(C,D); decimal or "
                        "rational entries")
    t.add_argument("--cutoff", type=float, default=None,
                   help="length cutoff for the class search (default "
                        "30 * systole)")

    c = sub.add_parser("cylinder", parents=[common],
                       help="winding-window sweep against the half-plane "
                            "crossing oracle")
    c.add_argument("--core-length", type=float, required=True,
                   dest="core_length")
    c.add_argument("--samples", type=int, default=1000)
    c.add_argument("--mode", choices=("full", "shrunk"), default="shrunk")
    c.add_argument("--arcs-json", dest="arcs_json", default=None,
                   help="JSON file with explicit arc pairs to check: "
                        '{"pairs": [{"arc1": [entry_t, winding, sign], '
                        '"arc2": [...]}, ...]}')

    b = sub.add_parser("bounds", parents=[common],
                       help="bound and asymptotic-profile table over a "
                            "systole grid")
    b.add_argument("--genus", type=int, required=True)
    b.add_argument("--l1-grid", dest="l1_grid", required=True,
                   metavar="LO:HI:STEPS")
    b.add_argument("--geometric", action="store_true",
                   help="space the grid geometrically")

    v = sub.add_parser("verify", parents=[common],
                       help="run the verification suites")
    v.add_argument("--suite", choices=("all", "torus", "cylinder",
                                       "bounds"), default="all")
    return parser


def _common_inputs(args) -> dict:
    return {"seed": args.seed, "precision": args.precision,
            "format": args.fmt}


def run_torus(args) -> tuple[dict, Optional[tuple]]:
    lat = Lattice.from_string(args.lattice)
    sys_len = systole(lat)
    cutoff = args.cutoff if args.cutoff is not None else 30.0 * sys_len
    k = k_real(lat)
    best = best_ratio_search(lat, cutoff)
    seg = segment_bound_check(lat, cutoff)

    violations: list[str] = []
    if best.ratio > k * (1.0 + 1e-12):
        violations.append(
            f"best ratio {best.ratio!r} exceeds k_real = {k!r}")
    if not seg.nine_bound_ok:
        violations.append(
            f"segment bound 9 violated: max {seg.max_normalized!r}")
    if not seg.sine_bound_ok:
        violations.append(
            f"angle bound violated: max {seg.max_normalized!r} > "
            f"{seg.sine_bound!r}")
    norms = []
    for cls in best.pair:
        rep = norm_comparison_report(lat, RealClass(float(cls.a),
                                                    float(cls.b)))
        norms.append({"cls": [cls.a, cls.b], "stable": rep.stable,
                      "l2": rep.l2, "two_sided_ok": rep.two_sided_ok})
        if not rep.two_sided_ok:
            violations.append(
                f"norm comparison failed on class {(cls.a, cls.b)}")

    report = {
        "command": "torus",
        "inputs": {**_common_inputs(args), "lattice": args.lattice,
                   "cutoff": args.cutoff},
        "results": {
            "covolume": lat.covolume,
            "k_real": k,
            "systole": sys_len,
            "diameter": torus_diameter(lat),
            "cutoff_used": cutoff,
            "best_ratio": best.ratio,
            "argmax_pair": [[best.pair[0].a, best.pair[0].b],
                            [best.pair[1].a, best.pair[1].b]],
            "segment_bound": {
                "pairs_checked": seg.pairs_checked,
                "max_normalized": seg.max_normalized,
                "argmax_pair": [list(seg.argmax_pair[0]),
                                list(seg.argmax_pair[1])],
                "nine_bound_ok": seg.nine_bound_ok,
                "sine_bound": seg.sine_bound,
                "sine_bound_ok": seg.sine_bound_ok,
            },
            "norm_comparison": norms,
        },
        "violations": violations,
    }
    return report, None


def _load_arc(raw) -> ArcSpec:
    if not (isinstance(raw, (list, tuple)) and len(raw) == 3):
        raise DomainError(f"an arc must be [entry_t, winding, sign], "
                          f"got {raw!r}")
    try:
        return ArcSpec(entry_t=float(raw[0]), winding=float(raw[1]),
                       crossing_sign=int(raw[2]))
    except (TypeError, ValueError) as exc:
        raise DomainError(f"unparseable arc {raw!r}: {exc}") from None


def run_cylinder(args) -> tuple[dict, Optional[tuple]]:
    if args.samples < 1:
        raise DomainError(f"need at least one sample, got {args.samples}")
    cyl = make_collar(args.core_length, args.mode)
    rng = named_stream(args.seed, "cli.cylinder")
    res = lemma_sweep(args.core_length, args.samples, rng, mode=args.mode,
                      collect_records=True)
    violations = list(res.violations)

    pair_reports = []
    if args.arcs_json is not None:
        try:
            with open(args.arcs_json, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
            pairs = doc["pairs"]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise DomainError(
                f"cannot read arc pairs from {args.arcs_json}: "
                f"{exc}") from None
        for i, item in enumerate(pairs):
            try:
                arc1 = _load_arc(item["arc1"])
                arc2 = _load_arc(item["arc2"])
            except (KeyError, TypeError) as exc:
                raise DomainError(
                    f"malformed arc pair #{i}: {exc}") from None
            same_side = arc1.crossing_sign == arc2.crossing_sign
            wb = intersection_bounds(arc1.winding, arc2.winding, same_side)
            rep = count_crossings_cyl(cyl, arc1, arc2, rng)
            entry = {
                "arc1": [arc1.entry_t, arc1.winding, arc1.crossing_sign],
                "arc2": [arc2.entry_t, arc2.winding, arc2.crossing_sign],
                "same_side": same_side,
                "count": rep.count,
                "signs": list(rep.signs),
                "window": [wb.lo, wb.hi],
                "expected_sign": arc1.crossing_sign * wb.sign,
            }
            pair_reports.append(entry)
            if not wb.lo <= rep.count <= wb.hi:
                violations.append(
                    f"pair #{i}: count {rep.count} outside window "
                    f"[{wb.lo}, {wb.hi}]")
            expected = arc1.crossing_sign * wb.sign
            if rep.count and expected and any(s != expected
                                              for s in rep.signs):
                violations.append(
                    f"pair #{i}: signs {rep.signs} not uniformly "
                    f"{expected}")

    records = [dict(r) for r in res.records]
    report = {
        "command": "cylinder",
        "inputs": {**_common_inputs(args),
                   "core_length": args.core_length,
                   "samples": args.samples, "mode": args.mode,
                   "arcs_json": args.arcs_json},
        "results": {
            "core_length": cyl.core_length,
            "half_width": cyl.half_width,
            "boundary_circle": cyl.boundary_circle_length(),
            "samples": res.samples,
            "max_count": res.max_count,
            "records": records,
            "pairs": pair_reports,
        },
        "violations": violations,
    }
    csv_rows = [
        (r["c_wind"], r["d_wind"], r["same_side"], r["entry_1"],
         r["entry_2"], r["first_sign"],
         "" if r["count"] is None else r["count"],
         r["window"][0], r["window"][1], r["expected_sign"],
         "" if r["signs"] is None else "|".join(str(s) for s in r["signs"]),
         r["ok"])
        for r in records
    ]
    return report, (_RECORD_COLUMNS, csv_rows)


def run_bounds(args) -> tuple[dict, Optional[tuple]]:
    grid = parse_grid(args.l1_grid, geometric=args.geometric)
    rows = asymptotic_profile(args.genus, grid,
                              extended=args.precision == "extended")
    violations: list[str] = []
    for row in rows:
        if not row.lower < row.upper:
            violations.append(
                f"lower {row.lower!r} not below upper {row.upper!r} at "
                f"l1={row.l1!r}")
        if not row.lower < row.collar_rate:
            violations.append(
                f"lower {row.lower!r} not below collar rate "
                f"{row.collar_rate!r} at l1={row.l1!r}")
    table = [list(row) for row in rows]
    report = {
        "command": "bounds",
        "inputs": {**_common_inputs(args), "genus": args.genus,
                   "l1_grid": args.l1_grid, "geometric": args.geometric},
        "results": {"columns": list(_PROFILE_COLUMNS), "rows": table},
        "violations": violations,
    }
    return report, (_PROFILE_COLUMNS, table)


def run_verify(args) -> tuple[dict, Optional[tuple]]:
    reports = run_suites(args.suite, args.seed)
    suites_out = []
    violations: list[str] = []
    for rep in reports:
        suites_out.append({
            "suite": rep.suite,
            "checks": [{"name": c.name, "cases": c.cases,
                        "failures": c.failures} for c in rep.checks],
            "violations": list(rep.violations),
        })
        violations.extend(f"[{rep.suite}] {v}" for v in rep.violations)
    report = {
        "command": "verify",
        "inputs": {**_common_inputs(args), "suite": args.suite},
        "results": {"suites": suites_out},
        "violations": violations,
    }
    return report, None


_RUNNERS = {
    "torus": run_torus,
    "cylinder": run_cylinder,
    "bounds": run_bounds,
    "verify": run_verify,
}


def _emit(report: dict, csv_data, args) -> None:
    if args.fmt == "csv":
        if csv_data is None:
            raise DomainError(
                f"csv output is only available for tabular sweeps "
                f"(bounds, cylinder), not {report['command']!r}")
        header, rows = csv_data
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        report, csv_data = _RUNNERS[args.command](args)
        report["timing_ms"] = None
        report["version"] = __version__
        _emit(report, csv_data, args)
    except (GeometryError, RetrySignal) as exc:
        print(f"intnorm: error: {exc}", file=sys.stderr)
        return 2
    elapsed_ms = (time.perf_counter() - started) * 1000.0
    print(f"# intnorm {args.command}: {elapsed_ms:.1f} ms",
          file=sys.stderr)
    return 1 if report["violations"] else 0


if __name__ == "__main__":
    sys.exit(main())

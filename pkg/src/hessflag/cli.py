"""Command-line front end: single-flag queries, full-variety reports,
batch atlas over all Hessenberg functions, generator dumps, and
verification runs.

Exit codes: 0 success, 1 usage error, 2 verification disagreement,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import datetime
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import __version__, verify
from .classify import (
    CellVerdict,
    cell_verdict,
    codim1_perms,
    is_normal,
    is_singular_flag,
    variety_report,
)
from .complement import complement, full_string_heights
from .generators import generator_set
from .jacobian import build_jacobian, eval_at_flag, rank_exact, sample_cell_rank
from .perms import (
    EnumerationCapError,
    HessenbergFunction,
    Permutation,
    enumerate_hess,
    flag_in_hess,
    hess_codim,
    parse_hessenberg,
    parse_permutation,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DISAGREEMENT = 2
EXIT_CAP = 3

DEFAULT_ATLAS_CAP = 7
DEFAULT_QUERY_CAP = 10

SCHEMA_VERSION = 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        sys.exit(EXIT_USAGE)


class CapExceeded(Exception):
    pass


def _cap(default: int) -> int:
    env = os.environ.get("HESSFLAG_MAX_N")
    return int(env) if env is not None else default


def _check_cap(n: int, default: int, unsafe: bool):
    cap = _cap(default)
    if n > cap and not unsafe:
        raise CapExceeded(
            f"n={n} exceeds cap {cap}; pass --unsafe-n or set HESSFLAG_MAX_N"
        )


def _parse_inputs(args) -> tuple[HessenbergFunction, Permutation | None]:
    try:
        h = parse_hessenberg(args.h)
        h.require_strict()
        w = None
        if getattr(args, "w", None) is not None:
            w = parse_permutation(args.w)
            if w.n != h.n:
                raise ValueError(f"w has n={w.n} but h has n={h.n}")
        return h, w
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        sys.exit(EXIT_USAGE)


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_classify(args) -> int:
    h, w = _parse_inputs(args)
    _check_cap(h.n, DEFAULT_QUERY_CAP, args.unsafe_n)
    record: dict = {"schema_version": SCHEMA_VERSION, "h": str(h), "w": str(w)}
    if not flag_in_hess(w, h):
        record["in_variety"] = False
        record["note"] = "flag not in variety"
    else:
        heights = full_string_heights(complement(w, h))
        record["in_variety"] = True
        record["singular"] = bool(heights)
        record["string_heights"] = heights
        record["cell_verdict"] = cell_verdict(w, h).value
        if args.verify_jacobian:
            jac = build_jacobian(w, h)
            rank = rank_exact(eval_at_flag(jac))
            record["jacobian_rank"] = rank
            record["codim"] = hess_codim(h)
            record["agree"] = (rank < hess_codim(h)) == bool(heights)
        if record["cell_verdict"] == CellVerdict.INDETERMINATE_CELL.value:
            jac = build_jacobian(w, h)
            probe_rank, _ = sample_cell_rank(jac, seed=args.seed)
            record["cell_probe"] = {
                "max_rank_sampled": probe_rank,
                "codim": hess_codim(h),
                "note": "sampled, not proven",
            }
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        from . import render

        render.draw_complement_grid(
            complement(w, h),
            os.path.join(args.figures, f"complement_{w}.png"),
            title=f"h={h}, w={w}",
        )
    if args.format == "json":
        _emit(json.dumps(record) + "\n", args.out)
    else:
        lines = [f"h = {h}", f"w = {w}"]
        if not record["in_variety"]:
            lines.append("flag not in variety")
        else:
            lines.append(f"singular: {record['singular']}")
            lines.append(f"string heights: {record['string_heights']}")
            lines.append(f"cell verdict: {record['cell_verdict']}")
            if "jacobian_rank" in record:
                lines.append(
                    f"jacobian rank: {record['jacobian_rank']} "
                    f"(codim {record['codim']}), agree: {record['agree']}"
                )
            if "cell_probe" in record:
                probe = record["cell_probe"]
                lines.append(
                    f"cell probe: max sampled rank {probe['max_rank_sampled']} "
                    f"of codim {probe['codim']} (sampled, not proven)"
                )
        _emit("\n".join(lines) + "\n", args.out)
    if record.get("agree") is False:
        return EXIT_DISAGREEMENT
    return EXIT_OK


def _report_json(report) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "n": report.h.n,
        "h": str(report.h),
        "dim": report.dim,
        "codim": report.codim,
        "normal": report.normal,
        "num_flags": report.num_flags,
        "num_singular_flags": report.num_singular_flags,
        "codim1": [
            {"i": r.index, "case": r.case, "p": str(r.p), "verdict": r.verdict.value}
            for r in report.codim1
        ],
        "flags": [
            {
                "w": str(f.w),
                "singular": f.singular,
                "string_heights": list(f.string_heights),
                **({"jacobian_rank": f.jacobian_rank} if f.jacobian_rank is not None else {}),
            }
            for f in report.flags
        ],
    }


def cmd_variety(args) -> int:
    h, _ = _parse_inputs(args)
    _check_cap(h.n, DEFAULT_QUERY_CAP, args.unsafe_n)
    report = variety_report(h, verify_jacobian=args.verify_jacobian)
    if args.figures:
        os.makedirs(args.figures, exist_ok=True)
        from . import render

        render.draw_hess_grid(h, os.path.join(args.figures, "hess_grid.png"))
        for f in report.flags:
            if f.singular:
                render.draw_complement_grid(
                    complement(f.w, h),
                    os.path.join(args.figures, f"complement_{f.w}.png"),
                    title=f"h={h}, w={f.w}",
                )
    if args.format == "json":
        _emit(json.dumps(_report_json(report)) + "\n", args.out)
    elif args.format == "csv":
        lines = ["w,singular,string_heights,jacobian_rank"]
        for f in report.flags:
            heights = ";".join(str(x) for x in f.string_heights)
            rank = "" if f.jacobian_rank is None else str(f.jacobian_rank)
            lines.append(f"{f.w},{str(f.singular).lower()},{heights},{rank}")
        _emit("\n".join(lines) + "\n", args.out)
    else:
        lines = [
            f"h = {h} (n={h.n})",
            f"dim = {report.dim}, codim = {report.codim}",
            f"normal: {report.normal}",
            f"flags in variety: {report.num_flags}, singular: {report.num_singular_flags}",
            "singular flags: "
            + " ".join(str(f.w) for f in report.flags if f.singular),
            "codim-1 cells:",
        ]
        for r in report.codim1:
            lines.append(f"  p_{r.index} = {r.p} (case {r.case}): {r.verdict.value}")
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _atlas_record(values: tuple[int, ...], verify_jacobian: bool) -> dict:
    h = HessenbergFunction(values)
    report = variety_report(h, verify_jacobian=verify_jacobian)
    return {
        "schema_version": SCHEMA_VERSION,
        "n": h.n,
        "h": str(h),
        "normal": report.normal,
        "dim": report.dim,
        "codim": report.codim,
        "num_flags": report.num_flags,
        "num_singular_flags": report.num_singular_flags,
        "codim1": [
            {"i": r.index, "case": r.case, "p": str(r.p), "verdict": r.verdict.value}
            for r in report.codim1
        ],
        "tool_version": __version__,
    }


def cmd_atlas(args) -> int:
    _check_cap(args.n, DEFAULT_ATLAS_CAP, args.unsafe_n)
    hs = enumerate_hess(args.n)
    tasks = [(h.values, args.verify_jacobian) for h in hs]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            records = list(pool.map(_atlas_record, *zip(*tasks)))
    else:
        records = [_atlas_record(*task) for task in tasks]
    if args.timestamps:
        stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
        for record in records:
            record["timestamp"] = stamp
    text = "".join(json.dumps(record) + "\n" for record in records)
    _emit(text, args.out)
    return EXIT_OK


def cmd_codim1(args) -> int:
    h, _ = _parse_inputs(args)
    _check_cap(h.n, DEFAULT_QUERY_CAP, args.unsafe_n)
    entries = []
    for i, case, p in codim1_perms(h):
        entries.append(
            {
                "i": i,
                "case": case,
                "p": str(p),
                "in_variety": flag_in_hess(p, h),
                "singular": is_singular_flag(p, h),
                "verdict": cell_verdict(p, h).value,
            }
        )
    if args.format == "json":
        _emit(json.dumps({"schema_version": SCHEMA_VERSION, "h": str(h), "codim1": entries}) + "\n", args.out)
    else:
        lines = [f"h = {h}, normal: {is_normal(h)}"]
        for e in entries:
            lines.append(
                f"  p_{e['i']} = {e['p']} (case {e['case']}): "
                f"singular={e['singular']}, cell={e['verdict']}"
            )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_generators(args) -> int:
    h, w = _parse_inputs(args)
    _check_cap(h.n, DEFAULT_QUERY_CAP, args.unsafe_n)
    if not flag_in_hess(w, h):
        sys.stderr.write("error: flag not in variety\n")
        return EXIT_USAGE
    gens = generator_set(w, h)
    if args.format == "json":
        payload = {
            "schema_version": SCHEMA_VERSION,
            "h": str(h),
            "w": str(w),
            "generators": [
                {"i": i, "j": j, "poly": str(poly)} for (i, j), poly in gens.entries
            ],
        }
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        lines = [f"g[{i},{j}] = {poly}" for (i, j), poly in gens.entries]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        results = verify.run_all(args.n_max, jobs=args.jobs)
    except EnumerationCapError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP
    failed = False
    for name, result in results.items():
        status = "pass" if result.ok else "FAIL"
        print(f"{name}: {status} ({result.comparisons} comparisons)")
        for failure in result.failures:
            print(f"  {failure}")
            failed = True
    return EXIT_DISAGREEMENT if failed else EXIT_OK


def _add_common(p, with_w=False, with_format=("text", "json")):
    p.add_argument("--h", required=True, help="Hessenberg function, e.g. 3,3,4,5,5")
    if with_w:
        p.add_argument("--w", required=True, help="permutation in one-line notation")
    p.add_argument("--format", choices=with_format, default="text")
    p.add_argument("--out", default=None, help="write output to file instead of stdout")
    p.add_argument("--figures", default=None, help="directory for figure output")
    p.add_argument("--unsafe-n", action="store_true", help="lift the n cap")


def build_parser() -> _Parser:
    parser = _Parser(prog="hessflag", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a single permutation flag")
    _add_common(p, with_w=True)
    p.add_argument("--verify-jacobian", action="store_true")
    p.add_argument("--seed", type=int, default=0, help="cell-point sampler seed")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("variety", help="full report for one Hessenberg function")
    _add_common(p, with_format=("text", "json", "csv"))
    p.add_argument("--verify-jacobian", action="store_true")
    p.set_defaults(func=cmd_variety)

    p = sub.add_parser("atlas", help="JSON-lines records for all h at a given n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--verify-jacobian", action="store_true")
    p.add_argument("--timestamps", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--unsafe-n", action="store_true", help="lift the n cap")
    p.set_defaults(func=cmd_atlas)

    p = sub.add_parser("codim1", help="codimension-1 cell permutations for h")
    _add_common(p)
    p.set_defaults(func=cmd_codim1)

    p = sub.add_parser("generators", help="dump the local ideal generators")
    _add_common(p, with_w=True)
    p.set_defaults(func=cmd_generators)

    p = sub.add_parser("verify", help="run the cross-verification suites")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CapExceeded, EnumerationCapError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from collections import Counter
from fractions import Fraction
from typing import Any, Sequence

from .diagrams import Partition, as_rational, check_alpha, corners, format_rational, profile
from .growth import (
    PlancherelAlpha,
    ZMeasure,
    centrality_check,
    level_distribution,
    sample_paths,
    total_variation,
)
from .interlace import Atom, DiscreteDist, cotransition_dist, transition_dist
from .jack import JackContext, ZMeasureError
from .oracle import DEFAULT_ALPHAS, DEFAULT_SP_GRID, SUITES, VerificationReport, enumerate_partitions

SCHEMA_VERSION = "1.0"


class UsageError(Exception):
    pass


def rational_field(q: Fraction, name: str) -> dict[str, Any]:
    return {name: format_rational(q), f"{name}_decimal": float(q)}


def document(command: str, inputs: dict[str, Any], payload: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command, "inputs": inputs, "payload": payload}


def dist_payload(dist: DiscreteDist) -> list[dict[str, Any]]:
    total = sum(dist.weights, Fraction(0))
    if total != 1:
        raise AssertionError(f"distribution sums to {total}")
    atoms = []
    for a in dist.atoms:
        atom = {"point": format_rational(a.point), **rational_field(a.weight, "weight")}
        if a.label is not None:
            atom["partition"] = str(a.label)
        atoms.append(atom)
    return atoms


def parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def parse_alpha(text: str) -> Fraction:
    try:
        return check_alpha(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def parse_rational(text: str) -> Fraction:
    try:
        return as_rational(text)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def parse_alpha_list(text: str) -> list[Fraction]:
    return [parse_alpha(tok) for tok in text.split(",") if tok.strip()]


def parse_sp_grid(text: str) -> list[tuple[Fraction, Fraction]]:
    """``"0,1;-1,3"`` -> [(0, 1), (-1, 3)]."""
    grid = []
    for pair in text.split(";"):
        toks = pair.split(",")
        if len(toks) != 2:
            raise UsageError(f"bad (s,p) pair {pair!r}; expected 's,p'")
        grid.append((parse_rational(toks[0]), parse_rational(toks[1])))
    return grid


def cmd_dist(args) -> tuple[dict, int]:
    lam = parse_partition(args.partition)
    alpha = parse_alpha(args.alpha)
    pair = corners(lam, alpha)
    ctx = JackContext(alpha)
    if args.kind == "transition":
        dist, labelled = transition_dist(pair), ctx.p_alpha(lam)
    else:
        if not lam:
            raise UsageError("the empty diagram has no co-transition distribution")
        dist, labelled = cotransition_dist(pair), ctx.q_alpha(lam)
    # the analytic weights are emitted; the combinatorial law only supplies the diagram at each point
    labels = {a.point: a.label for a in labelled.atoms}
    dist = DiscreteDist(tuple(Atom(a.point, a.weight, labels[a.point]) for a in dist.atoms))
    inputs = {"partition": str(lam), "alpha": format_rational(alpha), "kind": args.kind}
    return document("dist", inputs, {"atoms": dist_payload(dist)}), 0


def dims_rows(n: int, alpha: Fraction) -> list[dict[str, Any]]:
    ctx = JackContext(alpha)
    rows = []
    for lam in enumerate_partitions(n):
        rec, hook, phi = ctx.dim_recurrent(lam), ctx.dim_hook(lam), ctx.phi(lam)
        rows.append({"partition": lam, "dim_recurrent": rec, "dim_hook": hook,
                     "agree": rec == hook, "phi": phi, "measure": phi * hook})
    return rows


def cmd_dims(args) -> tuple[dict | str, int]:
    if args.n < 0:
        raise UsageError("n must be non-negative")
    alpha = parse_alpha(args.alpha)
    rows = dims_rows(args.n, alpha)
    total = sum((r["measure"] for r in rows), Fraction(0))
    code = 0 if total == 1 and all(r["agree"] for r in rows) else 1
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["partition", "dim_recurrent", "dim_hook", "agree", "phi", "measure"])
        for r in rows:
            writer.writerow([str(r["partition"]), format_rational(r["dim_recurrent"]),
                             format_rational(r["dim_hook"]), r["agree"],
                             format_rational(r["phi"]), format_rational(r["measure"])])
        return buf.getvalue(), code
    table = [
        {"partition": str(r["partition"]),
         "dim_recurrent": format_rational(r["dim_recurrent"]),
         **rational_field(r["dim_hook"], "dim_hook"),
         "agree": r["agree"],
         "phi": format_rational(r["phi"]),
         **rational_field(r["measure"], "measure")}
        for r in rows
    ]
    payload = {"rows": table, "measure_total": format_rational(total)}
    return document("dims", {"n": args.n, "alpha": format_rational(alpha)}, payload), code


def make_chain(args):
    alpha = parse_alpha(args.alpha)
    has_z = args.s is not None or args.p is not None
    if args.plancherel and has_z:
        raise UsageError("--plancherel cannot be combined with --s/--p")
    if has_z:
        if args.s is None or args.p is None:
            raise UsageError("the z-measure chain needs both --s and --p")
        return ZMeasure(alpha, parse_rational(args.s), parse_rational(args.p))
    return PlancherelAlpha(alpha)


def cmd_sample(args) -> tuple[dict, int]:
    chain = make_chain(args)
    if args.n < 0 or args.count < 1:
        raise UsageError("need n >= 0 and count >= 1")
    paths = sample_paths(chain, args.n, args.count, args.seed)
    payload: dict[str, Any] = {}
    if not args.no_paths:
        payload["paths"] = [[str(lam) for lam in path.diagrams] for path in paths]
    if args.histogram:
        counts = Counter(path.shape for path in paths)
        exact = level_distribution(chain, args.n).weights
        freq = {lam: Fraction(c, args.count) for lam, c in counts.items()}
        tv = total_variation(freq, exact)
        payload["histogram"] = [
            {"partition": str(lam), "count": counts.get(lam, 0),
             **rational_field(freq.get(lam, Fraction(0)), "frequency"),
             **rational_field(w, "exact")}
            for lam, w in exact.items()
        ]
        payload.update(rational_field(tv, "tv_distance"))
    inputs = {"chain": chain.describe(), "n": args.n, "seed": args.seed, "count": args.count}
    return document("sample", inputs, payload), 0


def centrality_report(n_max: int, alphas, sp_grid) -> VerificationReport:
    report = VerificationReport("centrality")
    chains = [PlancherelAlpha(a) for a in alphas]
    chains += [ZMeasure(a, s, p) for a in alphas for s, p in (sp_grid or ())]
    for chain in chains:
        for entry in centrality_check(chain, n_max).entries:
            report.record(entry.ok, chain=chain.describe(), partition=entry.shape,
                          value=entry.value, expected=entry.expected,
                          cotransitions_ok=entry.cotransitions_ok, error=entry.error)
    return report


def cmd_verify(args) -> tuple[dict, int]:
    alphas = parse_alpha_list(args.alphas) if args.alphas else list(DEFAULT_ALPHAS)
    explicit_grid = parse_sp_grid(args.sp) if args.sp else None
    sp_grid = explicit_grid or list(DEFAULT_SP_GRID)
    names = list(SUITES) + ["centrality"] if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        if name == "centrality":
            if args.nmax > 7:
                raise UsageError("the centrality suite enumerates paths; use --nmax <= 7")
            reports.append(centrality_report(args.nmax, alphas, explicit_grid))
        else:
            reports.append(SUITES[name](args.nmax, alphas, sp_grid))
    passed = all(r.passed for r in reports)
    inputs = {"suite": args.suite, "nmax": args.nmax,
              "alphas": [format_rational(a) for a in alphas],
              "sp": [[format_rational(s), format_rational(p)] for s, p in sp_grid]}
    payload = {"passed": passed, "reports": [r.to_dict(timing=args.timing) for r in reports]}
    return document("verify", inputs, payload), 0 if passed else 1


def cmd_profile(args) -> tuple[dict, int]:
    lam = parse_partition(args.partition)
    alpha = parse_alpha(args.alpha)
    pair = corners(lam, alpha)
    prof = profile(pair)
    inputs = {"partition": str(lam), "alpha": format_rational(alpha), "rescale": args.rescale}
    payload: dict[str, Any] = {"center": format_rational(prof.center),
                               "area": format_rational(pair.area),
                               "wings": "omega(u) = |u - center| outside the breakpoints"}
    if args.rescale:
        if not lam:
            raise UsageError("cannot rescale the empty diagram")
        scale = math.sqrt(alpha * lam.n)
        payload["scale"] = scale
        payload["breakpoints"] = [{"u": float(u) / scale, "omega": float(w) / scale}
                                  for u, w in prof.polyline()]
    else:
        payload["breakpoints"] = [{"u": format_rational(u), "omega": format_rational(w)}
                                  for u, w in prof.polyline()]
    return document("profile", inputs, payload), 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="younglattice",
                                     description="Exact Young-lattice combinatorics and growth chains.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser):
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--out", default=None, help="output file (default: stdout)")

    p = sub.add_parser("dist", help="transition or co-transition distribution of a diagram")
    p.add_argument("--partition", required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--kind", choices=["transition", "cotransition"], default="transition")
    common(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("dims", help="alpha-dimensions and Plancherel weights of level n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", default="1")
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("sample", help="sample growth paths")
    p.add_argument("--alpha", default="1")
    p.add_argument("--plancherel", action="store_true")
    p.add_argument("--s", default=None)
    p.add_argument("--p", default=None)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--histogram", action="store_true")
    p.add_argument("--no-paths", action="store_true")
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run an exhaustive verification suite")
    p.add_argument("--suite", choices=list(SUITES) + ["centrality", "all"], required=True)
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--alphas", default=None, help="comma-separated rationals")
    p.add_argument("--sp", default=None, help="(s,p) pairs, e.g. '0,1;-1,3'")
    p.add_argument("--timing", action="store_true", help="include elapsed times (breaks byte-identity)")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("profile", help="border polyline of a diagram")
    p.add_argument("--partition", required=True)
    p.add_argument("--alpha", default="1")
    p.add_argument("--rescale", action="store_true")
    common(p)
    p.set_defaults(func=cmd_profile)
    return parser


def write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".younglattice-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        os.unlink(tmp)
        raise


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.format == "csv" and args.command != "dims":
            raise UsageError("CSV output is only available for tables (the dims command)")
        result, code = args.func(args)
    except (UsageError, ZMeasureError) as exc:
        print(f"younglattice {args.command}: error: {exc}", file=sys.stderr)
        return 2
    text = result if isinstance(result, str) else json.dumps(result, indent=2, ensure_ascii=False) + "\n"
    write_output(text, args.out)
    return code


if __name__ == "__main__":
    sys.exit(main())

"""Command-line entry point.

Exit codes: 0 success / property holds, 1 negative verdict, 2 resource or
budget exhaustion, 3 input error.  All outputs are deterministic:
identical inputs and flags give byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import fixtures as fixture_mod
from .axioms import is_projective, validate
from .confinement import confined_core, is_confined_finite
from .encoders import get_encoder
from .errors import (
    BudgetError,
    EncoderError,
    FreeplaneError,
    NotAPlaneError,
    ParseError,
    ResourceError,
    StructureError,
)
from .extension import DEFAULT_BUDGET, ExtensionMode, extend
from .harness import check_restriction, fullness_check, spb_check
from .lattice import check_geometric_length3, to_lattice
from .morphisms import DEFAULT_NODE_CAP, bi_embeddable, embeddings, isomorphisms
from .serialization import (
    dumps_structure,
    dumps_trace,
    hasse_dot,
    incidence_dot,
    load_structure,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_RESOURCE = 2
EXIT_INPUT = 3


def _write(path, text):
    Path(path).write_text(text, encoding="utf-8")


def _write_json(path, data):
    _write(path, json.dumps(data, indent=2) + "\n")


def _emit(data):
    sys.stdout.write(json.dumps(data, indent=2) + "\n")


def _load(path, strict):
    return load_structure(path, strict=strict)


def cmd_validate(args):
    S = _load(args.input, args.strict)
    report = validate(S)
    out = report.to_dict()
    try:
        out["projective"] = is_projective(S)
    except NotAPlaneError:
        out["projective"] = None
    if args.out:
        _write_json(args.out, out)
    else:
        _emit(out)
    return EXIT_OK if report.is_plane() else EXIT_NEGATIVE


def cmd_extend(args):
    S = _load(args.input, args.strict)
    mode = ExtensionMode.parse(args.mode)
    trace = extend(S, args.stages, mode=mode, budget=args.budget)
    if args.out:
        _write(args.out, dumps_trace(trace))
    else:
        _emit(
            {
                "stage_sizes": [list(s) for s in trace.stage_sizes()],
                "stopped_reason": trace.stopped_reason,
                "truncated": trace.truncated,
            }
        )
    if args.emit_dot:
        dot_dir = Path(args.emit_dot)
        dot_dir.mkdir(parents=True, exist_ok=True)
        for i, stage in enumerate(trace.stages):
            _write(dot_dir / f"stage_{i}.dot", incidence_dot(stage, f"stage_{i}"))
    if args.plot:
        from .figures import plot_growth

        plot_growth(trace, args.plot)
    return EXIT_RESOURCE if trace.truncated else EXIT_OK


def cmd_core(args):
    S = _load(args.input, args.strict)
    result = confined_core(S)
    if args.require_plane_core:
        rep = validate(result.core)
        if not rep.is_plane():
            sys.stderr.write("core does not satisfy plane axioms (A)-(D)\n")
            return EXIT_NEGATIVE
    if args.out:
        _write(args.out, dumps_structure(result.core))
    else:
        _emit(json.loads(dumps_structure(result.core)))
    if args.log:
        _write_json(
            args.log,
            {
                "rounds": result.rounds,
                "deleted": [list(d) for d in result.deleted],
            },
        )
    return EXIT_OK


def cmd_lattice(args):
    S = _load(args.input, args.strict)
    L = to_lattice(S, strict=False)
    code = EXIT_OK
    if args.check:
        report = check_geometric_length3(L)
        payload = {
            "passed": all(not v for v in report.values()),
            "checks": {k: [list(w) for w in v] for k, v in report.items()},
        }
        if args.out:
            _write_json(args.out, payload)
        else:
            _emit(payload)
        if not payload["passed"]:
            code = EXIT_NEGATIVE
    if args.emit_hasse:
        _write(args.emit_hasse, hasse_dot(L))
    if args.emit_hasse_png:
        from .figures import plot_hasse

        plot_hasse(L, args.emit_hasse_png)
    return code


def cmd_embed(args):
    S1 = _load(args.source, args.strict)
    S2 = _load(args.target, args.strict)
    limit = None if args.all else (args.limit or 1)
    morphs = embeddings(S1, S2, kind=args.kind, limit=limit, node_cap=args.node_cap)
    payload = {"count": len(morphs), "morphisms": [m.to_dict() for m in morphs]}
    if args.out:
        _write_json(args.out, payload)
    else:
        _emit(payload)
    return EXIT_OK if morphs else EXIT_NEGATIVE


def cmd_aut(args):
    S = _load(args.input, args.strict)
    morphs = isomorphisms(S, S, node_cap=args.node_cap)
    payload = {
        "order": len(morphs),
        "automorphisms": [m.to_dict() for m in morphs],
    }
    if args.out:
        _write_json(args.out, payload)
    else:
        _emit(payload)
    return EXIT_OK


def cmd_biembed(args):
    S1 = _load(args.a, args.strict)
    S2 = _load(args.b, args.strict)
    holds = bi_embeddable(S1, S2, kind=args.kind, node_cap=args.node_cap)
    _emit({"bi_embeddable": holds, "kind": args.kind})
    return EXIT_OK if holds else EXIT_NEGATIVE


def _report_rows(report):
    for r in report.results:
        yield [r.check, r.subject, "pass" if r.passed else "fail", r.detail or ""]


def _write_report(report, out_path, figures_dir):
    data = report.to_dict()
    if out_path:
        _write_json(out_path, data)
        csv_path = Path(out_path).with_suffix(".csv")
        with open(csv_path, "w", newline="", encoding="utf-8") as fh:
            writer = csv.writer(fh)
            writer.writerow(["check", "subject", "verdict", "detail"])
            writer.writerows(_report_rows(report))
    else:
        _emit(data)
    if figures_dir:
        from .figures import plot_harness_report

        fig_dir = Path(figures_dir)
        fig_dir.mkdir(parents=True, exist_ok=True)
        plot_harness_report(report, fig_dir / "verdicts.png")


def cmd_harness_spb(args):
    encoder = get_encoder(args.encoder)
    instance_dir = Path(args.instances)
    if not instance_dir.is_dir():
        raise ParseError(f"{args.instances!r} is not a directory")
    instances = []
    for path in sorted(instance_dir.glob("*.json")):
        instances.append((path.stem, load_structure(path, strict=args.strict)))
    if not instances:
        raise ParseError(f"no *.json instances found in {args.instances!r}")
    report = spb_check(encoder, instances, kind=args.kind, node_cap=args.node_cap)
    if args.fullness:
        for (na, xa) in instances:
            a, b, equal = fullness_check(encoder, xa, xa, node_cap=args.node_cap)
            report.add(
                "fullness-counts",
                f"{na}~{na}",
                equal,
                witness=None if equal else {"iso_count": a, "encoded_iso_count": b},
                detail=f"|Iso|={a}, |Iso(F)|={b}",
            )
    _write_report(report, args.out, args.figures)
    return EXIT_OK if report.passed() else EXIT_NEGATIVE


def cmd_harness_restriction(args):
    S1 = _load(args.a, args.strict)
    S2 = _load(args.b, args.strict)
    mode = ExtensionMode.parse(args.mode)
    t1 = extend(S1, args.n, mode=mode, budget=args.budget)
    t2 = extend(S2, args.m, mode=mode, budget=args.budget)
    if t1.truncated or t2.truncated:
        sys.stderr.write("extension budget exhausted before requested stage\n")
        return EXIT_RESOURCE
    report = check_restriction(t1, t2, args.n, args.m, kind=args.kind)
    _write_report(report, args.out, args.figures)
    return EXIT_OK if report.passed() else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freeplane",
        description="Finite incidence geometry: planes, free extensions, "
        "cores, lattices, and embedding search.",
    )
    parser.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="worker bound for internal parallelism (currently serial)",
    )
    parser.add_argument(
        "--seed", type=int, default=0, help="seed for randomized test utilities"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--strict", action="store_true", help="reject unknown JSON fields")
        if out:
            p.add_argument("--out", help="output file (default: stdout)")

    p = sub.add_parser("validate", help="check the plane axioms")
    p.add_argument("input", metavar="plane.json")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("extend", help="run staged free extension")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--stages", type=int, required=True)
    p.add_argument("--mode", choices=["full", "meets"], default="full")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--emit-dot", help="directory for per-stage DOT graphs")
    p.add_argument("--plot", help="write a growth-curve PNG")
    common(p)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("core", help="compute the confined core")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--require-plane-core", action="store_true")
    p.add_argument("--log", help="write the deletion log JSON")
    common(p)
    p.set_defaults(func=cmd_core)

    p = sub.add_parser("lattice", help="bounded-lattice view and checks")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--check", action="store_true")
    p.add_argument("--emit-hasse", help="write the Hasse diagram DOT")
    p.add_argument("--emit-hasse-png", help="render the Hasse diagram PNG")
    common(p)
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("embed", help="search embeddings between two structures")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--kind", choices=["lattice", "incidence"], default="lattice")
    p.add_argument("--all", action="store_true")
    p.add_argument("--limit", type=int)
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common(p)
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("aut", help="enumerate the automorphism group")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common(p)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("biembed", help="check bi-embeddability")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--kind", choices=["lattice", "incidence"], default="lattice")
    p.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    common(p, out=False)
    p.set_defaults(func=cmd_biembed)

    p = sub.add_parser("harness", help="transfer-property verification")
    hsub = p.add_subparsers(dest="harness_command", required=True)

    hp = hsub.add_parser("spb", help="stabilizer-preservation checks for an encoder")
    hp.add_argument("--encoder", required=True, help="identity|naive|broken|plugin:<path>")
    hp.add_argument("--instances", required=True, help="directory of *.json structures")
    hp.add_argument("--kind", choices=["lattice", "incidence"], default="incidence")
    hp.add_argument("--fullness", action="store_true", help="also compare Iso counts")
    hp.add_argument("--node-cap", type=int, default=DEFAULT_NODE_CAP)
    hp.add_argument("--figures", help="directory for rendered report figures")
    common(hp)
    hp.set_defaults(func=cmd_harness_spb)

    hp = hsub.add_parser("restriction", help="embedding-restriction checks")
    hp.add_argument("--a", required=True)
    hp.add_argument("--b", required=True)
    hp.add_argument("--n", type=int, required=True)
    hp.add_argument("--m", type=int, required=True)
    hp.add_argument("--kind", choices=["lattice", "incidence"], default="lattice")
    hp.add_argument("--mode", choices=["full", "meets"], default="full")
    hp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    hp.add_argument("--figures", help="directory for rendered report figures")
    common(hp)
    hp.set_defaults(func=cmd_harness_restriction)

    p = sub.add_parser("fixtures", help="write the bundled fixtures to a directory")
    p.add_argument("--dir", required=True)
    p.set_defaults(func=cmd_fixtures)

    return parser


def cmd_fixtures(args):
    out = Path(args.dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, builder in fixture_mod.FIXTURES.items():
        _write(out / f"{name}.json", dumps_structure(builder()))
    return EXIT_OK


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except ParseError as exc:
        loc = ""
        if exc.line is not None:
            loc = f" (line {exc.line}, column {exc.column})"
        sys.stderr.write(f"input error: {exc}{loc}\n")
        return EXIT_INPUT
    except (StructureError, NotAPlaneError, EncoderError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    except (BudgetError, ResourceError) as exc:
        sys.stderr.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE
    except FreeplaneError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_NEGATIVE
    except FileNotFoundError as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT


def main():
    raise SystemExit(run())


if __name__ == "__main__":
    main()

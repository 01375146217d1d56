"""Command-line surface.

Every command emits a single self-describing report envelope

    {"command", "config", "inputs", "verdicts", "data"}

serialized deterministically (sorted keys, fixed indentation), so reports
are byte-identical across runs with the same inputs and seed.  Exit status:
0 on success/pass, 1 when a check fails, 2 on input errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys

from . import homology, selftest, serialize
from .complexes import TwoComplex, pi0
from .coslice import (
    check_tree_creation,
    colim_cx,
    construction_one,
    construction_two,
    invariants_report,
)
from .errors import PreconditionError, SizeLimitError, UnsupportedConfigurationError, ValidationError
from .graphs import Graph, is_tree, realize
from .setmodel import CosliceSet, FinFun, FinSet, verify_universal_property

COMMANDS = (
    "realize",
    "is-tree",
    "colim",
    "coslice-colim",
    "invariants",
    "check-tree-creation",
    "check-universality",
    "check-universal-property",
    "check-ofs",
    "check-weak-limit",
    "selftest",
)


def _default_seed() -> int:
    env = os.environ.get("HOCOLIM_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValidationError(f"HOCOLIM_SEED must be an integer, got {env!r}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hocolim",
        description="Finite colimit engine for coslice homotopy colimits",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("input", nargs="?", help="input JSON document")
    parser.add_argument("--construction", choices=("1", "2", "both"), default="both")
    parser.add_argument("--seed", type=int, default=None, help="PRNG seed (default: HOCOLIM_SEED or 0)")
    parser.add_argument("--max-set", type=int, default=3, help="tip size bound for universal-property sweeps")
    parser.add_argument("--max-vertices", type=int, default=6, help="vertex bound for generated shapes")
    parser.add_argument("--enum-cap", type=int, default=10**6, help="cap on enumerated function spaces")
    parser.add_argument("--trials", type=int, default=None, help="override the number of randomized trials")
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--figures", metavar="DIR", default=None, help="also render matplotlib figures into DIR")
    parser.add_argument("--output", metavar="FILE", default=None, help="write the report to FILE instead of stdout")
    return parser


def _load_json(path: str):
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ValidationError(f"{path}: {exc}") from exc
    try:
        return json.loads(raw), hashlib.sha256(raw).hexdigest()
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc


def _scrub(value):
    """Drop volatile fields (timings) so reports stay byte-identical."""
    if isinstance(value, dict):
        return {k: _scrub(v) for k, v in value.items() if k != "seconds"}
    if isinstance(value, (list, tuple)):
        return [_scrub(v) for v in value]
    return value


def _flatten(value, prefix=""):
    if isinstance(value, dict):
        for k in sorted(value):
            yield from _flatten(value[k], f"{prefix}.{k}" if prefix else str(k))
    elif isinstance(value, list):
        for n, v in enumerate(value):
            yield from _flatten(v, f"{prefix}[{n}]")
    else:
        yield prefix, value


def _emit(envelope: dict, fmt: str, output: str | None) -> None:
    if fmt == "json":
        text = json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    else:
        lines = [f"{k}\t{v}" for k, v in _flatten(envelope)]
        text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _needs_input(command: str) -> bool:
    return command in ("realize", "is-tree", "colim", "coslice-colim", "invariants")


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    seed = args.seed if args.seed is not None else _default_seed()
    config = {
        "seed": seed,
        "construction": args.construction,
        "max_set": args.max_set,
        "max_vertices": args.max_vertices,
        "enum_cap": args.enum_cap,
        "format": args.format,
    }
    if args.trials is not None:
        config["trials"] = args.trials
    inputs = {}
    doc = None
    if args.input:
        doc, digest = _load_json(args.input)
        inputs[args.input] = f"sha256:{digest}"
    elif _needs_input(args.command):
        raise ValidationError(f"{args.command} requires an input document")

    verdicts: dict = {}
    data: dict = {}
    figures: list = []

    def want_figures() -> bool:
        return args.figures is not None

    if args.command == "realize":
        graph = Graph.from_json(doc)
        cx = realize(graph)
        data["complex"] = cx.to_json()
        if want_figures():
            from . import viz

            figures.append(viz.render_graph(graph, viz.figure_path(args.figures, "shape"), seed))
            figures.append(viz.render_complex(cx, viz.figure_path(args.figures, "realization"), seed))
    elif args.command == "is-tree":
        graph = Graph.from_json(doc)
        verdict = is_tree(graph)
        verdicts["is_tree"] = verdict
        data["vertices"] = len(graph.vertices)
        data["edges"] = len(graph.edges)
        if want_figures():
            from . import viz

            figures.append(viz.render_graph(graph, viz.figure_path(args.figures, "shape"), seed))
    elif args.command == "colim":
        shape, objects, arrows = serialize.complex_diagram_from_json(doc)
        colim = colim_cx(shape, objects, arrows)
        data["complex"] = colim.total.to_json()
        data["invariants"] = invariants_report(colim.total)
        if want_figures():
            from . import viz

            figures.append(viz.render_graph(shape, viz.figure_path(args.figures, "shape"), seed))
            figures.append(viz.render_complex(colim.total, viz.figure_path(args.figures, "colimit"), seed))
    elif args.command == "coslice-colim":
        d = serialize.adiagram_from_json(doc)
        if args.construction in ("1", "both"):
            c1 = construction_one(d)
            data["construction1"] = {
                "complex": c1.coslice.total.to_json(),
                "invariants": invariants_report(c1.coslice.total),
            }
            if want_figures():
                from . import viz

                figures.append(
                    viz.render_complex(c1.coslice.total, viz.figure_path(args.figures, "construction1"), seed)
                )
        if args.construction in ("2", "both"):
            c2 = construction_two(d)
            data["construction2"] = {
                "complex": c2.coslice.total.to_json(),
                "invariants": invariants_report(c2.coslice.total),
            }
            if want_figures():
                from . import viz

                figures.append(
                    viz.render_complex(c2.coslice.total, viz.figure_path(args.figures, "construction2"), seed)
                )
    elif args.command == "invariants":
        cx = TwoComplex.from_json(doc)
        data["invariants"] = invariants_report(cx)
        if want_figures():
            from . import viz

            figures.append(viz.render_complex(cx, viz.figure_path(args.figures, "complex"), seed))
    elif args.command == "check-tree-creation":
        if doc is not None:
            d = serialize.adiagram_from_json(doc)
            report = check_tree_creation(d)
            verdicts["tree_creation"] = report["ok"]
            data["report"] = report
        else:
            report = selftest.criterion_tree_creation(seed=seed, cases=args.trials or 100)
            verdicts["tree_creation"] = report["ok"]
            data["report"] = report
    elif args.command == "check-universality":
        report = selftest.criterion_universality(seed=seed, tree_cases=args.trials or 100)
        verdicts["universality"] = report["ok"]
        data["report"] = report
    elif args.command == "check-universal-property":
        if doc is not None:
            d = serialize.coslice_set_diagram_from_json(doc)
            all_ok = True
            swept = 0
            for tsize in range(1, args.max_set + 1):
                tset = FinSet(tuple(f"t{k}" for k in range(tsize)))
                import itertools as it

                for tvals in it.product(tset.elements, repeat=len(d.base)):
                    tip = CosliceSet(
                        d.base, tset, FinFun(d.base, tset, dict(zip(d.base.elements, tvals)))
                    )
                    ok = verify_universal_property(d, tip, args.enum_cap)
                    all_ok = all_ok and ok
                    swept += 1
            verdicts["universal_property"] = all_ok
            data["tips_checked"] = swept
        else:
            report = selftest.criterion_universal_property(
                seed=seed, random_cases=args.trials or 200, enum_cap=args.enum_cap
            )
            verdicts["universal_property"] = report["ok"]
            data["report"] = report
    elif args.command == "check-ofs":
        report = selftest.criterion_ofs(
            seed=seed,
            filler_cases=args.trials or 500,
            pushout_cases=max(200, (args.trials or 200)),
        )
        verdicts["ofs"] = report["ok"]
        data["report"] = report
    elif args.command == "check-weak-limit":
        if doc is not None:
            d = serialize.adiagram_from_json(doc)
            report = homology.weak_limit_check(d.shape, d)
            verdicts["weak_limit_exact"] = report["exact"]
            data["report"] = report
        else:
            report = selftest.criterion_weak_limit(seed=seed, cases=args.trials or 100)
            verdicts["weak_limit_exact"] = report["ok"]
            data["report"] = report
    elif args.command == "selftest":
        results = selftest.run_all(seed=seed)
        overall = results.pop("ok")
        for name, rep in results.items():
            if isinstance(rep, dict) and "ok" in rep:
                verdicts[name] = rep["ok"]
        data["results"] = results
        verdicts["all"] = overall
        if want_figures():
            from . import viz

            figures.append(
                viz.render_verdicts(
                    {k: v for k, v in verdicts.items() if k != "all"},
                    viz.figure_path(args.figures, "selftest"),
                    title="selftest",
                )
            )

    envelope = {
        "command": args.command,
        "config": config,
        "inputs": inputs,
        "verdicts": verdicts,
        "data": _scrub(data),
    }
    if figures:
        envelope["figures"] = figures
    _emit(envelope, args.format, args.output)
    return 0 if all(verdicts.values()) else 1


def main(argv: list[str] | None = None) -> int:
    try:
        return run(argv)
    except (ValidationError, PreconditionError, SizeLimitError, UnsupportedConfigurationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, TypeError) as exc:
        print(f"error: malformed input document ({exc!r})", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

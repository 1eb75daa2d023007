"""Command-line front end: ``squarekit <command> [--in FILE | --gen SPEC | --diagram SEQ]``."""

from __future__ import annotations

import argparse
import json
import sys

from .chords import ChordDiagram, circle_graph, diagram_from_squaregraph, squaregraph_from_diagram
from .embedding import embed_in_trees, min_trees
from .errors import SquareKitError
from .generators import generate
from .genset import compatibility_stats, hull_report, inner_lines, min_generating_set
from .graph import Graph, median, median_witness
from .helly import hellyfy
from .recognition import curvature, is_squaregraph
from .render import render_svg, to_dot
from .splits import SplitSystem, halfspace_system, incompatibility_graph, is_two_compatible

COMMANDS = (
    "recognize", "medians", "splits", "dual", "hellyfy", "embed",
    "genset", "hull", "curvature", "generate", "render", "stats",
)


class InputError(SquareKitError):
    kind = "bad-input"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="squarekit", description="Squaregraph toolkit")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        c = sub.add_parser(name)
        src = c.add_mutually_exclusive_group(required=name not in ("stats",))
        src.add_argument("--in", dest="infile", help="JSON input file ('-' for stdin)")
        src.add_argument("--gen", help="generator spec, e.g. grid:3x3 or random:seed=7,steps=20")
        src.add_argument("--diagram", help="chord diagram, e.g. 1,2,1,2")
        c.add_argument("--out", help="output path (default: stdout)")
        c.add_argument("--format", choices=("json", "svg", "dot"), default=None)
        if name == "medians":
            c.add_argument("--triple", help="three comma separated vertices")
        if name == "stats":
            c.add_argument("--corpus", type=int, help="write a report over this many random instances")
            c.add_argument("--max-steps", type=int, default=30)
    return p


def _load(args):
    """The input as a Graph, SplitSystem or ChordDiagram."""
    if args.gen:
        return generate(args.gen)
    if args.diagram is not None:
        return ChordDiagram.parse(args.diagram)
    try:
        text = sys.stdin.read() if args.infile == "-" else open(args.infile).read()
    except OSError as exc:
        raise InputError(f"cannot read {args.infile}: {exc.strerror}", path=args.infile) from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc.msg} at line {exc.lineno}", path=args.infile) from exc
    if isinstance(data, dict) and "diagram" in data:
        d = data["diagram"]
        return ChordDiagram.parse(d) if isinstance(d, str) else ChordDiagram(d)
    if isinstance(data, dict) and "splits" in data:
        return SplitSystem.from_json(data)
    if isinstance(data, dict) and "vertices" in data and "edges" in data:
        return Graph.from_json(data)
    raise InputError("JSON input is not a graph, split system or chord diagram")


def _graph(x) -> Graph:
    if isinstance(x, Graph):
        return x
    if isinstance(x, ChordDiagram):
        return squaregraph_from_diagram(x)
    raise InputError("this command needs a graph")


def run_command(args):
    """Return (payload, default format)."""
    cmd = args.command
    if cmd == "stats" and args.corpus is not None:
        from .report import write_report

        return write_report(args.out or "squarekit-report", args.corpus, args.max_steps), "json"
    if cmd == "stats" and not (args.infile or args.gen or args.diagram is not None):
        raise InputError("stats needs an input or --corpus")
    x = _load(args)
    if cmd == "hellyfy":
        if not isinstance(x, SplitSystem):
            raise InputError("hellyfy needs a split system")
        return hellyfy(x).to_json(), "json"
    if cmd == "dual":
        if isinstance(x, ChordDiagram):
            return squaregraph_from_diagram(x).to_json(), "json"
        d = diagram_from_squaregraph(_graph(x))
        return {"diagram": str(d), "chords": len(d), "circle_graph": circle_graph(d).to_json()}, "json"
    if cmd == "render":
        return (x if isinstance(x, ChordDiagram) else _graph(x)), "svg"
    if cmd == "generate":
        return _graph(x), "json"
    g = _graph(x)
    if cmd == "recognize":
        return is_squaregraph(g).to_json(), "json"
    if cmd == "medians":
        if args.triple:
            a, b, c = (t.strip() for t in args.triple.split(","))
            return {"triple": [a, b, c], "median": median(g, a, b, c)}, "json"
        w = median_witness(g)
        return {"median_graph": w is None, "witness": list(w) if w else None}, "json"
    if cmd == "splits":
        s = halfspace_system(g)
        return {
            **s.to_json(),
            "two_compatible": is_two_compatible(s),
            "incompatibility_graph": incompatibility_graph(s).to_json(),
        }, "json"
    if cmd == "embed":
        emb = embed_in_trees(g)
        return {**emb.to_json(), "min_trees": min_trees(g).to_json()}, "json"
    if cmd == "genset":
        gs = min_generating_set(g)
        return {
            "genset": sorted(gs),
            "size": len(gs),
            "inner_lines": [line.to_json() for line in inner_lines(g)],
        }, "json"
    if cmd == "hull":
        return hull_report(g).to_json(), "json"
    if cmd == "curvature":
        return curvature(g).to_json(), "json"
    if cmd == "stats":
        t, c = compatibility_stats(g)
        return {"t": t, "c": c}, "json"
    raise InputError(f"unknown command {cmd!r}")


def _emit(payload, fmt: str) -> str:
    if fmt == "svg":
        return render_svg(payload)
    if fmt == "dot":
        if not isinstance(payload, Graph):
            raise InputError("dot output is available for graphs only")
        return to_dot(payload)
    if isinstance(payload, (Graph, ChordDiagram)):
        payload = payload.to_json() if isinstance(payload, Graph) else {"diagram": str(payload)}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        payload, fmt = run_command(args)
        text = _emit(payload, args.format or fmt)
    except SquareKitError as exc:
        sys.stderr.write(json.dumps(exc.to_json(), sort_keys=True, default=str) + "\n")
        return 1
    if args.out and not (args.command == "stats" and args.corpus is not None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

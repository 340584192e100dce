"""Command line front end.

Verbs: perm, close, validate, minimize, equiv, orbit, realize, export.
Words are given inline in the text format "n=3 s(1,3) s(1,2)"; diagrams
are JSON files ('-' reads stdin).  Exit codes: 0 on success (including
"equivalent"), 1 for "not equivalent", 2 on parse or validation errors
and on orbit budget overflow.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import closure, equivalence, export, realize, words
from .diagram import (InvalidDiagram, crossing_count, dumps, loads,
                      to_json_obj)
from ._kernel import render_key
from .equivalence import DEFAULT_MAX_NODES


def _orbit_flags(p):
    p.add_argument("--max-nodes", type=int, default=DEFAULT_MAX_NODES,
                   help="orbit node budget (default %d)" % DEFAULT_MAX_NODES)
    p.add_argument("--threads", type=int, default=1,
                   help="worker threads for orbit search")
    p.add_argument("--labeled-components", action="store_true",
                   help="treat circles as labeled (no circle permutation)")


def build_parser():
    ap = argparse.ArgumentParser(
        prog="cactusdoodle",
        description="Cactus doodles: words, closures, Gauss diagram moves.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("perm", help="image of a word in the symmetric group")
    p.add_argument("word", help="word text, or - for stdin")

    p = sub.add_parser("close", help="closure of a word as diagram JSON")
    p.add_argument("word", help="word text, or - for stdin")

    p = sub.add_parser("validate", help="check a diagram JSON file")
    p.add_argument("file")

    p = sub.add_parser("minimize", help="minimal diagram and crossing number")
    p.add_argument("file")
    _orbit_flags(p)

    p = sub.add_parser("equiv", help="decide equivalence of two diagrams")
    p.add_argument("file1")
    p.add_argument("file2")
    _orbit_flags(p)

    p = sub.add_parser("orbit", help="slide orbit size and representatives")
    p.add_argument("file")
    _orbit_flags(p)

    p = sub.add_parser("realize", help="sphere realizability report")
    p.add_argument("file")
    p.add_argument("--faces", action="store_true",
                   help="also dump face boundary walks as JSON")

    p = sub.add_parser("export", help="schematic drawing of a diagram")
    p.add_argument("file")
    p.add_argument("--format", choices=("dot", "svg"), default="dot")
    p.add_argument("-o", "--output", default="-",
                   help="output file (default stdout)")
    return ap


def _read_word(arg):
    text = sys.stdin.read() if arg == "-" else arg
    return words.parse_word(text)


def _read_diagram(path):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return loads(text)


def _write(path, text):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def run(args):
    if args.verb == "perm":
        w = _read_word(args.word)
        print(" ".join(str(i) for i in words.perm_image(w).images))
        return 0

    if args.verb == "close":
        w = _read_word(args.word)
        print(dumps(closure.close(w), indent=2))
        return 0

    if args.verb == "validate":
        _read_diagram(args.file)  # loads() validates
        print("ok")
        return 0

    if args.verb == "minimize":
        d = _read_diagram(args.file)
        m = equivalence.minimize(d, args.max_nodes, args.threads,
                                 args.labeled_components)
        obj = {"diagram": to_json_obj(m), "crossing_number": crossing_count(m)}
        print(json.dumps(obj, indent=2, sort_keys=True))
        return 0

    if args.verb == "equiv":
        d1 = _read_diagram(args.file1)
        d2 = _read_diagram(args.file2)
        same = equivalence.equivalent(d1, d2, args.max_nodes, args.threads,
                                      args.labeled_components)
        print("equivalent" if same else "not equivalent")
        return 0 if same else 1

    if args.verb == "orbit":
        d = _read_diagram(args.file)
        summary = equivalence.psi_orbit(d, args.max_nodes, args.threads,
                                        args.labeled_components)
        print("size %d" % summary.size)
        for key in summary.representatives:
            print(render_key(key))
        return 0

    if args.verb == "realize":
        d = _read_diagram(args.file)
        rep = realize.genus_report(d)
        print("realizable: %s" % ("yes" if rep["realizable"] else "no"))
        for i, c in enumerate(rep["components"]):
            print("component %d: V=%d E=%d F=%d euler=%d genus=%d"
                  % (i, c["V"], c["E"], c["F"], c["euler"], c["genus"]))
        print("free loops: %d" % rep["free_loops"])
        if args.faces:
            fs = realize.faces(realize.ribbon_graph(d))
            walks = [[[list(tail), list(head)] for tail, head in walk]
                     for walk in fs.faces]
            print(json.dumps(walks))
        return 0

    if args.verb == "export":
        d = _read_diagram(args.file)
        text = export.to_dot(d) if args.format == "dot" else export.to_svg(d)
        _write(args.output, text)
        return 0

    raise AssertionError("unhandled verb %r" % args.verb)


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return run(args)
    except equivalence.OrbitBudgetExceeded as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except (InvalidDiagram, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

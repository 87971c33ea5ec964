"""Command-line front end: one subcommand per computation, JSON out.

Every success path prints a single newline-terminated JSON document on
stdout with sorted keys, so identical invocations are byte-identical.  All
numbers are exact; nothing here ever goes through a float.  Exit status is
0 on success, 1 for bad input (usage, validation, domain errors; message on
stderr), 2 for internal failures.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback

from .complexes import complex_from_json
from .facelattice import (
    FlagVector,
    flag_rank,
    flag_vector,
    ic_lattices,
    lattice_from_json,
)
from .hcalc import eval_word, fit_and_predict, ic_check, ic_training_data
from .ihomology import ih_ranks
from .lghomology import WSequence, lg_ranks
from .stratsimplex import dd_check, iter_shapes

__all__ = ["main"]


def _load_json(path: str):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


def _cmd_word(args) -> dict:
    return {"h": list(eval_word(args.word))}


def _cmd_iccheck(args) -> dict:
    if args.max_len < 1:
        raise ValueError("--max-len must be at least 1")
    words = 0
    all_hold = True
    for n in range(1, args.max_len + 1):
        for word, _ in ic_lattices(n):
            words += 1
            all_hold = all_hold and ic_check(eval_word(word)).holds
    return {"max_len": args.max_len, "words": words, "all_hold": all_hold}


def _cmd_flag(args) -> dict:
    lattice = lattice_from_json(_load_json(args.infile))
    return flag_vector(lattice).to_json()


def _fibonacci(n: int) -> int:
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def _cmd_fibrank(args) -> dict:
    rank = flag_rank(lattice for _, lattice in ic_lattices(args.dim))
    target = _fibonacci(args.dim + 1)
    return {"rank": rank, "fibonacci": target, "match": rank == target}


def _cmd_fit(args) -> dict:
    doc = _load_json(args.predict)
    # the query may arrive as a face lattice or directly as a flag vector
    if isinstance(doc, dict) and "faces" in doc:
        query = flag_vector(lattice_from_json(doc))
    else:
        query = FlagVector.from_json(doc)
    prediction = fit_and_predict(ic_training_data(args.dim), query)
    return {"h": [int(v) for v in prediction]}


def _cmd_ih(args) -> dict:
    k = complex_from_json(_load_json(args.infile))
    report = ih_ranks(k)
    return {
        "ranks": list(report.ranks),
        "cycles": list(report.cycles),
        "boundaries": list(report.boundaries),
        "perversity": report.perversity.to_json(),
    }


def _cmd_lg(args) -> dict:
    parts = args.dim_seq.split(",")
    if len(parts) != 2 or parts[1].strip() != "0":
        raise ValueError("--dim-seq must have the form 'i,0'")
    i = int(parts[0])
    k = complex_from_json(_load_json(args.infile))
    report = lg_ranks(k, i, WSequence((args.w,)))
    return {"rank": report.rank, "cells": report.cells, "w": list(report.w)}


def _cmd_shapes(args) -> dict:
    if not args.dd_check:
        raise ValueError("shapes requires --dd-check")
    all_zero = all(dd_check(shape) for shape in iter_shapes(args.max_total_dim))
    return {"all_zero": all_zero}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="strathom",
        description="Exact intersection homology and pyramid/prism h-calculus.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="h-vector of a word over {I, C}")
    p.add_argument("--word", required=True)
    p.set_defaults(handler=_cmd_word)

    p = sub.add_parser("iccheck", help="verify the IC-equation on all short words")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(handler=_cmd_iccheck)

    p = sub.add_parser("flag", help="flag vector of a face lattice")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=_cmd_flag)

    p = sub.add_parser("fibrank", help="rank of the IC flag vectors in one dimension")
    p.add_argument("--dim", type=int, required=True)
    p.set_defaults(handler=_cmd_fibrank)

    p = sub.add_parser("fit", help="fit linear forms on IC data and predict a query")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--predict", required=True, help="lattice or flag vector JSON")
    p.set_defaults(handler=_cmd_fit)

    p = sub.add_parser("ih", help="intersection homology ranks of a complex")
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(handler=_cmd_ih)

    p = sub.add_parser("lg", help="order-one local-global rank of a complex")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--dim-seq", required=True, help="dimension sequence, e.g. 1,0")
    p.add_argument("--w", type=int, required=True)
    p.set_defaults(handler=_cmd_lg)

    p = sub.add_parser("shapes", help="boundary-of-boundary sweep over shapes")
    p.add_argument("--dd-check", action="store_true")
    p.add_argument("--max-total-dim", type=int, required=True)
    p.set_defaults(handler=_cmd_shapes)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage problems and 0 on --help; fold usage
        # problems into the validation-error status
        return 0 if exc.code == 0 else 1
    try:
        doc = args.handler(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception:
        traceback.print_exc()
        return 2
    sys.stdout.write(json.dumps(doc, sort_keys=True) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())

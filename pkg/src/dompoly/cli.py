"""Command-line front end.

One verb per library operation chain, JSON on stdout by default
(`--format table` for a human-readable rendering), diagnostics on stderr.
Exit codes: 0 all requested checks pass, 1 a verification failed, 2 usage
error, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cycles, verify
from .errors import (
    Graph6FormatError,
    Graph6ParseError,
    Graph6RangeError,
    ParameterDomainError,
    SizeGuardError,
    ValuationError,
)
from .graphs import Graph, iter_graph6_records, parse_family_spec, parse_graph6
from .oracle import DEFAULT_GUARD, domination_number, domination_polynomial

_INPUT_ERRORS = (
    ParameterDomainError,
    SizeGuardError,
    Graph6ParseError,
    Graph6FormatError,
    Graph6RangeError,
    ValuationError,
    OSError,
)

_VERIFY_DEFAULT_MAX_N = {
    "L2-union": 8,
    "L3-cycle": 15,
    "L4-gamma": 15,
    "L5-alpha": 200,
    "REL2-beta": 200,
    "REL3-theta": 200,
    "L6-ord3": 1000,
    "R1-remark": 1000,
    "T5-partitions": 40,
    "T5-ten-cases": 60,
}


def _add_common_options(parser, for_subparser: bool):
    # On subparsers the defaults are SUPPRESS so a flag given after the
    # verb overrides the top-level value instead of being reset.
    suppress = argparse.SUPPRESS
    parser.add_argument(
        "--format", choices=("json", "table"),
        default=suppress if for_subparser else "json",
        help="output format (default json)",
    )
    parser.add_argument(
        "--threads", type=int, metavar="N",
        default=suppress if for_subparser else 1,
        help="worker-count hint forwarded to parallel library calls",
    )
    parser.add_argument(
        "--guard-override", type=int, metavar="N",
        default=suppress if for_subparser else None,
        help="raise the enumeration and corpus size guards to order N",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dompoly",
        description="Exact domination polynomials and desk-scale uniqueness checks.",
    )
    _add_common_options(parser, for_subparser=False)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_verb(*args, **kwargs):
        p = sub.add_parser(*args, **kwargs)
        _add_common_options(p, for_subparser=True)
        return p

    def add_graph_input(p):
        grp = p.add_mutually_exclusive_group(required=True)
        grp.add_argument("--family", metavar="NAME:PARAMS",
                         help="builtin family, e.g. cycle:7 or complete-cycle-join:2,5")
        grp.add_argument("--graph6", metavar="FILE",
                         help="graph6 file, one record per line")

    p = add_verb(
        "poly",
        help="domination polynomial of a graph (brute force; the cycle "
             "family uses its recurrence, so any order works)",
    )
    add_graph_input(p)

    p = add_verb("cycle", help="cycle polynomial D(C_n,x) via the recurrence")
    p.add_argument("n", type=int)

    p = add_verb("eval", help="evaluate D (or a derivative) at an integer")
    add_graph_input(p)
    p.add_argument("--at", type=int, required=True, metavar="T")
    p.add_argument("--derivative", type=int, default=0, metavar="K",
                   help="evaluate the K-th formal derivative (default 0)")

    p = add_verb("gamma", help="domination number by short-circuit enumeration")
    add_graph_input(p)

    p = add_verb("verify", help="run a verification check (or 'all')")
    p.add_argument("lemma", choices=verify.LEMMA_IDS + ("all",))
    p.add_argument("--max-n", type=int, default=None, metavar="N")
    p.add_argument("--min-part", type=int, choices=(1, 3), default=3)
    p.add_argument("--n", type=int, default=None,
                   help="graph order for corpus-backed checks")
    p.add_argument("--corpus", metavar="FILE",
                   help="graph6 corpus for COR-wheel / P-path-class")
    p.add_argument("--corpus-dir", metavar="DIR",
                   help="directory of order<k>.g6 files; enables corpus checks under 'all'")

    p = add_verb("search-partitions",
                       help="list cycle partitions of n and which match D(C_n,x)")
    p.add_argument("n", type=int)
    p.add_argument("--min-part", type=int, choices=(1, 3), default=3)

    p = add_verb("classify", help="group a graph6 corpus by domination polynomial")
    p.add_argument("corpus", metavar="FILE")

    p = add_verb("path-class", help="check the size-two class of P_n over a corpus")
    p.add_argument("n", type=int)
    p.add_argument("corpus", metavar="FILE")

    p = add_verb("wheel", help="check that W_n's class is a singleton over a corpus")
    p.add_argument("n", type=int)
    p.add_argument("corpus", metavar="FILE")

    return parser


# ---------------------------------------------------------------------------
# Graph input plumbing
# ---------------------------------------------------------------------------

def _read_corpus(path_str: str) -> list[bytes]:
    return list(iter_graph6_records(Path(path_str).read_bytes().splitlines()))


def _input_graphs(args) -> list[tuple[str, Graph]]:
    """Resolve --family / --graph6 into labeled graphs."""
    if args.family:
        return [(args.family, parse_family_spec(args.family))]
    records = _read_corpus(args.graph6)
    out = []
    for i, rec in enumerate(records):
        out.append((f"{args.graph6}#{i}", parse_graph6(rec)))
    return out


def _cycle_order(args) -> int | None:
    """Order n when the input is the cycle family (recurrence applies)."""
    if args.family and args.family.startswith("cycle:"):
        try:
            return int(args.family.split(":", 1)[1])
        except ValueError:
            return None
    return None


# ---------------------------------------------------------------------------
# Verbs
# ---------------------------------------------------------------------------

def _run_poly(args, guard, threads):
    n_cycle = _cycle_order(args)
    if n_cycle is not None:
        poly = cycles.cycle_polynomial(n_cycle)
        results = [{"source": args.family, "order": n_cycle,
                    "coefficients": poly.coefficient_strings()}]
    else:
        results = []
        for label, g in _input_graphs(args):
            poly = domination_polynomial(g, guard=guard, threads=threads)
            results.append({"source": label, "order": g.n,
                            "coefficients": poly.coefficient_strings()})
    return {"results": results}, True


def _run_cycle(args):
    poly = cycles.cycle_polynomial(args.n)
    return {"n": args.n, "coefficients": poly.coefficient_strings()}, True


def _run_eval(args, guard, threads):
    n_cycle = _cycle_order(args)
    if n_cycle is not None:
        labeled = [(args.family, None)]
    else:
        labeled = _input_graphs(args)
    results = []
    for label, g in labeled:
        poly = (
            cycles.cycle_polynomial(n_cycle)
            if g is None
            else domination_polynomial(g, guard=guard, threads=threads)
        )
        for _ in range(args.derivative):
            poly = poly.derivative()
        results.append({
            "source": label,
            "point": str(args.at),
            "derivative": args.derivative,
            "value": str(poly.eval_at(args.at)),
        })
    return {"results": results}, True


def _run_gamma(args, guard):
    results = []
    for label, g in _input_graphs(args):
        results.append({
            "source": label, "order": g.n,
            "gamma": domination_number(g, guard=guard),
        })
    return {"results": results}, True


def _run_verify(args, guard, corpus_guard, threads):
    def need(flag, value):
        if value is None:
            raise ParameterDomainError(
                f"verify {args.lemma} requires {flag}"
            )
        return value

    max_n = args.max_n or _VERIFY_DEFAULT_MAX_N.get(args.lemma, 0)
    lemma = args.lemma
    if lemma == "all":
        corpora = None
        if args.corpus_dir:
            corpora = {}
            for f in sorted(Path(args.corpus_dir).glob("order*.g6")):
                order = int(f.stem.removeprefix("order"))
                corpora[order] = list(iter_graph6_records(f.read_bytes().splitlines()))
        reports = verify.run_all(corpora=corpora, threads=threads)
        ok = all(r.passed for r in reports)
        return {"reports": [r.to_json_dict() for r in reports]}, ok

    if lemma == "L2-union":
        rep = verify.verify_union_product(max_order=max_n, guard=guard)
    elif lemma == "L3-cycle":
        rep = verify.verify_cycle_recurrence(max_n)
    elif lemma == "L4-gamma":
        rep = verify.verify_gamma_additivity_and_ceiling(max_n)
    elif lemma == "L5-alpha":
        rep = verify.verify_alpha(max_n)
    elif lemma == "REL2-beta":
        rep = verify.verify_beta(max_n)
    elif lemma == "REL3-theta":
        rep = verify.verify_theta(max_n)
    elif lemma == "L6-ord3":
        rep = verify.verify_ord3_table(max_n)
    elif lemma == "R1-remark":
        rep = verify.verify_remark(max_n)
    elif lemma == "T5-partitions":
        rep = verify.verify_cycle_uniqueness_range(3, max_n, args.min_part)
    elif lemma == "T5-ten-cases":
        rep = verify.verify_ten_case_table(max_n)
    elif lemma == "COR-wheel":
        records = _read_corpus(need("--corpus", args.corpus))
        rep = verify.verify_wheel_uniqueness(
            need("--n", args.n), records,
            threads=threads, corpus_guard=corpus_guard,
        )
    else:  # P-path-class
        records = _read_corpus(need("--corpus", args.corpus))
        rep = verify.verify_path_class(
            need("--n", args.n), records,
            threads=threads, corpus_guard=corpus_guard,
        )
    return rep.to_json_dict(), rep.passed


def _run_search_partitions(args):
    target = cycles.cycle_polynomial(args.n)
    rows = []
    matches = 0
    for parts in verify.enumerate_partitions(args.n, args.min_part):
        hit = verify.partition_polynomial(parts) == target
        matches += hit
        rows.append({"parts": list(parts), "matches": hit})
    payload = {
        "n": args.n,
        "min_part": args.min_part,
        "partitions": rows,
        "match_count": matches,
    }
    return payload, True


def _run_classify(args, guard, corpus_guard, threads):
    records = _read_corpus(args.corpus)
    result = verify.classify_corpus(
        records, threads=threads, corpus_guard=corpus_guard, guard=guard
    )
    return result.to_json_dict(), True


def _run_path_class(args, corpus_guard, threads):
    records = _read_corpus(args.corpus)
    rep = verify.verify_path_class(
        args.n, records, threads=threads, corpus_guard=corpus_guard
    )
    return rep.to_json_dict(), rep.passed


def _run_wheel(args, corpus_guard, threads):
    records = _read_corpus(args.corpus)
    rep = verify.verify_wheel_uniqueness(
        args.n, records, threads=threads, corpus_guard=corpus_guard
    )
    return rep.to_json_dict(), rep.passed


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _render_table(verb: str, payload: dict) -> str:
    lines = []
    if verb == "verify" and "reports" in payload:
        reports = payload["reports"]
    elif verb in ("verify", "path-class", "wheel"):
        reports = [payload]
    else:
        reports = None
    if reports is not None:
        lines.append(f"{'check':<14} {'range':<12} {'status':<6} {'cex':>4}  claim")
        for r in reports:
            rng = f"{r['range'][0]}..{r['range'][1]}"
            desc = verify.LEMMA_DESCRIPTIONS.get(r["lemma_id"], "")
            lines.append(
                f"{r['lemma_id']:<14} {rng:<12} {r['status']:<6} "
                f"{len(r['counterexamples']):>4}  {desc}"
            )
        return "\n".join(lines)
    if verb == "classify":
        lines.append(f"{'size':>6}  {'degree':>6}  members")
        for c in payload["classes"]:
            members = " ".join(c["members"][:4])
            if c["class_size"] > 4:
                members += " ..."
            degree = len(c["key_polynomial"]) - 1
            lines.append(f"{c['class_size']:>6}  {degree:>6}  {members}")
        if payload["parse_errors"]:
            lines.append(f"parse errors: {len(payload['parse_errors'])}")
        return "\n".join(lines)
    if verb == "search-partitions":
        for row in payload["partitions"]:
            mark = "=" if row["matches"] else " "
            lines.append(f"{mark} {'+'.join(str(p) for p in row['parts'])}")
        lines.append(f"{payload['match_count']} of {len(payload['partitions'])} match")
        return "\n".join(lines)
    # generic key/value fallback
    return json.dumps(payload, indent=2, sort_keys=True)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2

    guard = args.guard_override if args.guard_override is not None else DEFAULT_GUARD
    corpus_guard = (
        args.guard_override
        if args.guard_override is not None
        else verify.DEFAULT_CORPUS_GUARD
    )
    threads = max(1, args.threads)

    try:
        if args.verb == "poly":
            payload, ok = _run_poly(args, guard, threads)
        elif args.verb == "cycle":
            payload, ok = _run_cycle(args)
        elif args.verb == "eval":
            payload, ok = _run_eval(args, guard, threads)
        elif args.verb == "gamma":
            payload, ok = _run_gamma(args, guard)
        elif args.verb == "verify":
            payload, ok = _run_verify(args, guard, corpus_guard, threads)
        elif args.verb == "search-partitions":
            payload, ok = _run_search_partitions(args)
        elif args.verb == "classify":
            payload, ok = _run_classify(args, guard, corpus_guard, threads)
        elif args.verb == "path-class":
            payload, ok = _run_path_class(args, corpus_guard, threads)
        else:
            payload, ok = _run_wheel(args, corpus_guard, threads)
    except _INPUT_ERRORS as exc:
        print(f"dompoly: {exc}", file=sys.stderr)
        return 3

    if args.format == "table":
        print(_render_table(args.verb, payload))
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())

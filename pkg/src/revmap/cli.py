"""``revmap`` command line: group reports, triple enumeration, maps, classification, suites."""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import sys
from pathlib import Path

from .exceptions import EnumerationOverflow, RevmapError, cap_override
from .families import parse_group_spec
from .groups import structure_report
from .maps import MapKind, build_map, make_reversing_triple, map_record
from .suites import SUITES, SweepConfig, verify_suite
from .triples import classify_map, coprime_filter, equivalence_classes, match_canonical_form

EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _dumps(obj):
    return json.dumps(obj, separators=(",", ":"))


def _add_common(p, group=True):
    if group:
        p.add_argument("--group", "-g", "--spec", dest="group", required=True,
                       help="D:n, DxD:m,n, R3:m,n,l, S4C:m, MC:n,m,lambda or PERM:<file>")
    p.add_argument("--cap", type=int, default=None, help="enumeration cap (overrides REVMAP_CAP)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None, help="directory for emitted files")


def build_parser():
    parser = argparse.ArgumentParser(prog="revmap", description="Coset maps from reversing triples of involutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="describe a family group")
    _add_common(p)
    p.add_argument("--report", choices=("summary", "structure"), default="summary")

    p = sub.add_parser("triples", help="reversing triples up to equivalence, one record per class")
    _add_common(p)
    p.add_argument("--kind", type=MapKind.parse, default=None, help="also measure the map of this kind")
    p.add_argument("--no-swap", action="store_true", help="do not identify (x,y,z) with (y,x,z)")

    p = sub.add_parser("map", help="build one map and print its invariants")
    _add_common(p)
    p.add_argument("--kind", type=MapKind.parse, required=True, help="rev, birev or reg")
    p.add_argument("--triple", required=True, help="three comma-separated words, e.g. u,v,abw")

    p = sub.add_parser("classify", help="classify one map, or every coprime class of a group")
    _add_common(p)
    p.add_argument("--kind", type=MapKind.parse, default=MapKind.REV)
    p.add_argument("--triple", default=None)

    p = sub.add_parser("verify", help="run a verification suite")
    _add_common(p, group=False)
    p.add_argument("--suite", required=True, choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=None, help="bound for the dihedral sweeps")
    return parser


def _triple(G, text):
    words = [w.strip() for w in text.split(",")]
    if len(words) != 3:
        raise argparse.ArgumentTypeError(f"--triple needs three words, got {len(words)}")
    return make_reversing_triple(G, *words)


def _emit(records, fmt, out, stream, name):
    """Records are flat-ish dicts; csv flattens nested values to JSON strings."""
    if fmt == "json":
        text = "".join(_dumps(r) + "\n" for r in records)
    elif fmt == "csv":
        keys = []
        for r in records:
            keys += [k for k in r if k not in keys]
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(keys)
        for r in records:
            w.writerow([v if isinstance(v, (str, int, float, bool)) or v is None else _dumps(v)
                        for v in (r.get(k) for k in keys)])
        text = buf.getvalue()
    else:
        lines = []
        for r in records:
            width = max(len(k) for k in r)
            lines += [f"{k:<{width}}  {v if isinstance(v, str) else _dumps(v)}" for k, v in r.items()]
            lines.append("")
        text = "\n".join(lines)
    stream.write(text)
    if out:
        Path(out).mkdir(parents=True, exist_ok=True)
        ext = {"json": "jsonl", "csv": "csv", "text": "txt"}[fmt]
        (Path(out) / f"{name}.{ext}").write_text(text)


def cmd_group(args, stream):
    L = parse_group_spec(args.group)
    G = L.group
    rec = {
        "group": str(L.spec),
        "order": G.order,
        "degree": G.degree,
        "generators": {k: str(G.perm(v)) for k, v in sorted(L.labels.items())},
    }
    if args.report == "structure":
        rec["structure"] = structure_report(G).as_dict()
    _emit([rec], args.format, args.out, stream, "group")
    return 0


def cmd_triples(args, stream):
    L = parse_group_spec(args.group)
    G = L.group
    records = []
    for cls in equivalence_classes(G, allow_swap=not args.no_swap, cap=args.cap):
        tr = cls.representative_triple()
        tag = match_canonical_form(G, tr, args.cap)
        rec = {"group": str(L.spec), "triple": list(tr.words()), "classSize": cls.size,
               "canonical": tag.name, "orderRespecting": tag.ordered}
        if args.kind is not None:
            inv = build_map(tr, args.kind).invariants
            rec.update(kind=str(args.kind), chi=inv.chi, edges=inv.num_edges, coprime=inv.coprime)
        records.append(rec)
    _emit(records, args.format, args.out, stream, "triples")
    return 0


def cmd_map(args, stream):
    G = parse_group_spec(args.group).group
    cmap = build_map(_triple(G, args.triple), args.kind)
    _emit([map_record(cmap)], args.format, args.out, stream, "map")
    return 0


def _classify_record(cmap, cap):
    clause = classify_map(cmap, cap)
    rec = map_record(cmap)
    rec["clause"] = {"name": clause.clause, "params": clause.params, "reason": clause.reason}
    return rec, clause


def cmd_classify(args, stream):
    G = parse_group_spec(args.group).group
    if args.triple:
        rec, _ = _classify_record(build_map(_triple(G, args.triple), args.kind), args.cap)
        _emit([rec], args.format, args.out, stream, "classify")
        return 0
    records = []
    unmatched = 0
    for cls in equivalence_classes(G, cap=args.cap):
        tr = cls.representative_triple()
        if not coprime_filter(tr, args.kind)[0]:
            continue
        rec, clause = _classify_record(build_map(tr, args.kind), args.cap)
        unmatched += clause.clause == "unmatched"
        records.append(rec)
    _emit(records, args.format, args.out, stream, "classify")
    return EXIT_FAIL if unmatched else 0


def cmd_verify(args, stream):
    cfg = SweepConfig(cap=args.cap, out_dir=args.out)
    if args.max_n is not None:
        cfg = dataclasses.replace(cfg, dihedral_max_n=args.max_n, discriminant_max_n=args.max_n)
    rep = verify_suite(args.suite, cfg)
    if args.format == "json":
        stream.write(rep.json_lines())
        stream.write(_dumps({"suite": rep.suite, "counts": rep.counts}) + "\n")
    elif args.format == "csv":
        stream.write(rep.csv_text())
    else:
        stream.write(rep.text())
    return 0 if rep.ok else EXIT_FAIL


COMMANDS = {"group": cmd_group, "triples": cmd_triples, "map": cmd_map, "classify": cmd_classify,
            "verify": cmd_verify}


def run_command(argv, stream=None, err=None) -> int:
    stream = stream or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:  # argparse already printed usage
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        with cap_override(args.cap):
            return COMMANDS[args.command](args, stream)
    except EnumerationOverflow as exc:
        err.write(f"revmap: {exc}\n")
        return EXIT_CAP
    except (RevmapError, argparse.ArgumentTypeError, KeyError) as exc:
        parser.print_usage(err)
        err.write(f"revmap {args.command}: error: {exc}\n")
        return EXIT_USAGE


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()

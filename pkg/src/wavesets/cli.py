"""Command-line front end.

Exit status: 0 on success, 1 when the mathematics says no (the witness is
printed on stdout as JSON, a one-line summary on stderr), 2 on usage,
input or parameter-domain errors.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import accumulate, h2_enum, symmetric
from .documents import SetDocument, csv_lines, load_json, plotdata_lines, read_set
from .errors import NotAWaveletSetError, NotClassifiableError, ValidationError, WaveletSetError
from .exact_sets import as_rational, format_rational
from .polygonal import Polygonal, build as build_polygonal
from .tiling import verify_mra, verify_wavelet

DEPTH_ENV = "WAVESETS_DEPTH"


class UsageError(Exception):
    pass


def default_depth() -> int:
    raw = os.environ.get(DEPTH_ENV)
    if raw is None:
        return 16
    try:
        depth = int(raw)
    except ValueError:
        raise UsageError(f"{DEPTH_ENV}={raw!r} is not an integer") from None
    if depth < 1:
        raise UsageError(f"{DEPTH_ENV} must be positive")
    return depth


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def _fail(obj, summary: str) -> int:
    _emit(obj)
    print(summary, file=sys.stderr)
    return 1


def _verdict_exit(verdict, label: str) -> int:
    if verdict:
        _emit(verdict.to_dict())
        print(f"{label}: pass", file=sys.stderr)
        return 0
    return _fail(verdict.to_dict(), f"{label}: FAIL ({verdict.reason})")


def cmd_verify(args) -> int:
    doc = read_set(args.file)
    space = (args.space or doc.space).upper()
    verdict = verify_wavelet(doc.intervals, space)
    if not verdict or not args.mra:
        return _verdict_exit(verdict, f"{space} wavelet set")
    depth = args.depth or default_depth()
    try:
        mra = verify_mra(doc.intervals, depth)
    except NotAWaveletSetError as exc:
        raise UsageError(str(exc)) from None
    out = verdict.to_dict()
    out["mra"] = mra.to_dict()
    if mra:
        _emit(out)
        print(f"{space} wavelet set, MRA at depth {depth}: pass", file=sys.stderr)
        return 0
    return _fail(out, f"MRA at depth {depth}: FAIL ({mra.reason})")


def _split_params(raw) -> list[str]:
    out = []
    for chunk in raw or []:
        out.extend(x for x in chunk.split(",") if x)
    return out


def cmd_construct(args) -> int:
    if args.what == "polygonal":
        if not args.target:
            raise UsageError("construct polygonal needs a FILE")
        P = Polygonal.from_dict(load_json(args.target))
        S = build_polygonal(P)
        space = "H2" if P.flavor.value == "H2" else "L2"
        doc = SetDocument(S, space, {"polygonal": P.to_dict()})
    else:
        if not args.id:
            raise UsageError("construct family needs --id")
        fam = symmetric.FamilyId(args.id, tuple(_split_params(args.params)))
        S = symmetric.build_family(fam)
        doc = SetDocument(S, fam.space, {"family": fam.tag.value,
                                         "params": [str(p) for p in fam.params]})
    print(doc.dumps())
    return 0


def cmd_classify(args) -> int:
    doc = read_set(args.file)
    try:
        data = symmetric.classify(doc.intervals)
    except NotClassifiableError as exc:
        return _fail({"classifiable": False, "reason": str(exc)}, f"not classifiable: {exc}")
    _emit(data.to_dict())
    return 0


def cmd_decompose(args) -> int:
    doc = read_set(args.file)
    try:
        cert = h2_enum.decompose(doc.intervals)
    except NotAWaveletSetError as exc:
        return _fail({"decomposed": False, "position": exc.position, "reason": str(exc)},
                     f"no chain certificate: {exc}")
    _emit(cert.to_dict())
    return 0


def cmd_enumerate(args) -> int:
    rows = h2_enum.iter_rows(args.case, args.r_max, args.s_max, args.k)
    if args.csv:
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(h2_enum.CSV_HEADER)
        for row in rows:
            writer.writerow(row.csv_fields())
    else:
        _emit([dict(zip(h2_enum.CSV_HEADER, row.csv_fields())) for row in rows])
    return 0


def cmd_equiv(args) -> int:
    a, b = read_set(args.a), read_set(args.b)
    verdict = accumulate.check_equivalence(a.intervals, b.intervals, args.mode)
    return _verdict_exit(verdict, f"{args.mode} equivalence")


def cmd_accumulate(args) -> int:
    depth = args.depth or default_depth()
    fam = accumulate.make_family(args.id, args.n, as_rational(args.eps) if args.eps else None)
    verdict = accumulate.verify_truncated(fam, depth, "L2",
                                          as_rational(args.tolerance) if args.tolerance else None)
    doc = SetDocument(fam.materialize(depth), "L2", fam.to_dict(depth))
    out = {"set": doc.to_dict(), "verdict": verdict.to_dict()}
    if verdict:
        _emit(out)
        print(f"{fam.tag} depth {depth}: pass, tail {format_rational(verdict.residual)}", file=sys.stderr)
        return 0
    return _fail(out, f"{fam.tag} depth {depth}: FAIL ({verdict.reason})")


def cmd_export(args) -> int:
    doc = read_set(args.file)
    if args.format == "json":
        print(doc.dumps())
    elif args.format == "csv":
        print("\n".join(csv_lines(doc)))
    else:
        print("\n".join(plotdata_lines(doc, args.tag)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="wavesets",
                                     description="Exact construction and verification of MSF wavelet sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="check the tiling conditions of a set document")
    p.add_argument("file")
    p.add_argument("--space", type=str.upper, choices=["L2", "H2"])
    p.add_argument("--mra", action="store_true", help="also check the MRA condition")
    p.add_argument("--depth", type=int, help=f"MRA truncation depth (default ${DEPTH_ENV} or 16)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build a set from a polygonal or a named family")
    p.add_argument("what", choices=["polygonal", "family"])
    p.add_argument("target", nargs="?", help="polygonal JSON file")
    p.add_argument("--id", type=str.upper, choices=[t.value for t in symmetric.FamilyTag])
    p.add_argument("--params", nargs="+", help="family parameters, space or comma separated")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("classify", help="recover classification data of a symmetric set")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("decompose", help="translation and dilation chains of an H2 set")
    p.add_argument("file")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="three-interval H2 wavelet sets of one case")
    p.add_argument("--case", required=True, type=str.upper, choices=[c.value for c in h2_enum.CaseId])
    p.add_argument("--r-max", type=int, required=True)
    p.add_argument("--s-max", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("equiv", help="translation or dilation equivalence of two sets")
    p.add_argument("--mode", type=str.upper, choices=["TRANSLATION", "DILATION"], required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("accumulate", help="truncated verification of a family accumulating at 0")
    p.add_argument("--id", type=str.upper, choices=["WNE", "KNE", "PROPBRA"], required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--eps")
    p.add_argument("--depth", type=int)
    p.add_argument("--tolerance", help="largest acceptable tail measure")
    p.set_defaults(func=cmd_accumulate)

    p = sub.add_parser("export", help="re-emit a set document as json, csv or plot data")
    p.add_argument("--format", choices=["json", "csv", "plotdata"], default="json")
    p.add_argument("--tag", default="K", help="label column for plotdata")
    p.add_argument("file")
    p.set_defaults(func=cmd_export)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, ValidationError, WaveletSetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

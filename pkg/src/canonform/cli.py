"""Command-line front end: parse matrix files, dispatch to the library,
emit human-readable or JSON reports with optional verification replay.

Exit codes: 0 success, 1 domain errors, 2 parse errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import perm
from .determinant import det as compute_det
from .determinant import is_unimodular
from .domain import Ring, format_scalar
from .errors import Error, ParseError
from .hermite import hermite_canonical, hermite_form, solve
from .invariants import invariant_report
from .matrix import Matrix, lift, parse_matrix_file
from .similarity import char_poly, jordan, minimal_poly, rcf, similar
from .smith import smith


def _matrix_strings(a: Matrix) -> list[list[str]]:
    return [[format_scalar(e) for e in a.row(i)] for i in range(1, a.m + 1)]


def _envelope(verb: str, *, form=None, rank=None, diag=None,
              transforms=None, verified=None, **extra) -> dict:
    report = {
        "verb": verb,
        "form": form,
        "rank": rank,
        "diag": diag,
        "transforms": transforms,
        "verified": verified,
    }
    report.update(extra)
    return report


def _emit(report: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _write_transforms(path: str, payload: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _cmd_det(args) -> int:
    a = parse_matrix_file(args.file)
    value = compute_det(a)
    report = _envelope("det", form=format_scalar(value))
    _emit(report, args.json, [format_scalar(value)])
    return 0


def _cmd_hermite(args) -> int:
    a = parse_matrix_file(args.file)
    res = hermite_canonical(a) if args.canonical else hermite_form(a)
    verified = None
    if args.verify:
        verified = res.q @ a == res.h and is_unimodular(res.q)
    transforms = {
        "Q": _matrix_strings(res.q),
        "H": _matrix_strings(res.h),
        "rank": res.rank,
        "primary_cols": list(res.primary_cols),
    }
    if args.transforms:
        _write_transforms(args.transforms, transforms)
    report = _envelope(
        "hermite", form=_matrix_strings(res.h), rank=res.rank,
        transforms=transforms, verified=verified,
        primary_cols=list(res.primary_cols),
    )
    lines = [f"rank {res.rank}",
             "primary_cols " + ",".join(map(str, res.primary_cols))]
    lines += [" ".join(row) for row in _matrix_strings(res.h)]
    if verified is not None:
        lines.append(f"verified {str(verified).lower()}")
    _emit(report, args.json, lines)
    return 0 if verified in (None, True) else 1


def _cmd_smith(args) -> int:
    a = parse_matrix_file(args.file)
    res = smith(a)
    verified = None
    if args.verify:
        verified = (
            res.p @ a @ res.q == res.d
            and is_unimodular(res.p)
            and is_unimodular(res.q)
        )
    diag = [format_scalar(d) for d in res.diag]
    transforms = {
        "P": _matrix_strings(res.p),
        "Q": _matrix_strings(res.q),
        "D": _matrix_strings(res.d),
        "diag": diag,
        "rank": res.rank,
    }
    if args.transforms:
        _write_transforms(args.transforms, transforms)
    report = _envelope("smith", form=_matrix_strings(res.d), rank=res.rank,
                       diag=diag, transforms=transforms, verified=verified)
    lines = [" ".join(diag) if diag else "(empty)", f"rank {res.rank}"]
    if verified is not None:
        lines.append(f"verified {str(verified).lower()}")
    _emit(report, args.json, lines)
    return 0 if verified in (None, True) else 1


def _cmd_invariants(args) -> int:
    a = parse_matrix_file(args.file)
    rep = invariant_report(a)
    eds = [format_scalar(p ** e) for p, e in rep.elementary_divisors]
    report = _envelope(
        "invariants", rank=rep.rank,
        diag=[format_scalar(q) for q in rep.invariant_factors],
        det_divisors=[format_scalar(f) for f in rep.det_divisors],
        invariant_factors=[format_scalar(q) for q in rep.invariant_factors],
        elementary_divisors=eds,
    )
    lines = [
        f"rank {rep.rank}",
        "det_divisors " + " ".join(format_scalar(f) for f in rep.det_divisors),
        "invariant_factors "
        + (" ".join(format_scalar(q) for q in rep.invariant_factors) or "(empty)"),
        "elementary_divisors " + (" ".join(eds) or "(empty)"),
    ]
    _emit(report, args.json, lines)
    return 0


def _similarity_report(verb: str, args, compute) -> int:
    a = parse_matrix_file(args.file)
    cert, form = compute(a)
    verified = cert.verify(lift(a, Ring.Q))
    transforms = {"S": _matrix_strings(cert.s)}
    report = _envelope(verb, form=_matrix_strings(form), transforms=transforms,
                       verified=verified)
    lines = [" ".join(row) for row in _matrix_strings(form)]
    lines.append(f"verified {str(verified).lower()}")
    _emit(report, args.json, lines)
    return 0 if verified else 1


def _cmd_rcf(args) -> int:
    return _similarity_report("rcf", args, rcf)


def _cmd_jordan(args) -> int:
    return _similarity_report("jordan", args, jordan)


def _cmd_similar(args) -> int:
    a = parse_matrix_file(args.file_a)
    b = parse_matrix_file(args.file_b)
    cert = similar(a, b)
    if cert is None:
        report = _envelope("similar", verified=False, similar=False)
        _emit(report, args.json, ["not similar"])
        return 0
    verified = cert.verify(lift(a, Ring.Q))
    report = _envelope("similar", form=_matrix_strings(cert.target),
                       transforms={"S": _matrix_strings(cert.s)},
                       verified=verified, similar=True)
    lines = ["similar"] + [" ".join(row) for row in _matrix_strings(cert.s)]
    lines.append(f"verified {str(verified).lower()}")
    _emit(report, args.json, lines)
    return 0 if verified else 1


def _cmd_solve(args) -> int:
    a = parse_matrix_file(args.matrix)
    y = parse_matrix_file(args.vector)
    out = solve(a, y)
    if out is None:
        report = _envelope("solve", solvable=False)
        _emit(report, args.json, ["inconsistent"])
        return 0
    particular, basis = out
    report = _envelope(
        "solve", form=_matrix_strings(particular),
        rank=a.n - len(basis), solvable=True,
        nullity=len(basis),
        nullbasis=[_matrix_strings(v) for v in basis],
    )
    lines = ["particular " + " ".join(r[0] for r in _matrix_strings(particular)),
             f"nullity {len(basis)}"]
    for v in basis:
        lines.append("null " + " ".join(r[0] for r in _matrix_strings(v)))
    _emit(report, args.json, lines)
    return 0


def _cmd_minpoly(args) -> int:
    a = parse_matrix_file(args.file)
    value = minimal_poly(a)
    report = _envelope("minpoly", form=format_scalar(value))
    _emit(report, args.json, [format_scalar(value)])
    return 0


def _cmd_charpoly(args) -> int:
    a = parse_matrix_file(args.file)
    value = char_poly(a)
    report = _envelope("charpoly", form=format_scalar(value))
    _emit(report, args.json, [format_scalar(value)])
    return 0


def _cmd_perm(args) -> int:
    try:
        images = tuple(int(tok) for tok in args.oneline.split(","))
        f = perm.Permutation(images)
    except ValueError as exc:
        raise ParseError(f"bad one-line permutation {args.oneline!r}: {exc}") from None
    cyc = perm.cycles(f)
    cyc_str = "".join("(" + ",".join(map(str, c)) + ")" for c in cyc)
    inv = perm.inverse(f)
    report = _envelope(
        "perm", form=",".join(map(str, f.images)),
        cycles=cyc_str,
        index=perm.index(f),
        inversions=len(perm.inversions(f)),
        sign=perm.sign(f),
        inverse=",".join(map(str, inv.images)),
    )
    lines = [
        f"cycles {cyc_str}",
        f"index {perm.index(f)}",
        f"inversions {len(perm.inversions(f))}",
        f"sign {perm.sign(f):+d}",
        "inverse " + ",".join(map(str, inv.images)),
    ]
    _emit(report, args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="canonform",
        description="Exact matrix canonical forms over Z, Q and Q[x].",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, fn, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(fn=fn)
        p.add_argument("--json", action="store_true", help="structured report")
        return p

    p = add("det", _cmd_det, help="determinant of a matrix file")
    p.add_argument("file")

    p = add("hermite", _cmd_hermite, help="row Hermite form QA = H")
    p.add_argument("file")
    p.add_argument("--canonical", action="store_true",
                   help="normalize pivots and residues to the canonical SDRs")
    p.add_argument("--transforms", metavar="PATH", help="write Q/H JSON")
    p.add_argument("--verify", action="store_true", help="replay QA = H")

    p = add("smith", _cmd_smith, help="Smith form PAQ = D")
    p.add_argument("file")
    p.add_argument("--transforms", metavar="PATH", help="write P/Q/D JSON")
    p.add_argument("--verify", action="store_true", help="replay PAQ = D")

    p = add("invariants", _cmd_invariants,
            help="rank, determinantal divisors, invariant factors, elementary divisors")
    p.add_argument("file")

    p = add("rcf", _cmd_rcf, help="rational (Frobenius) canonical form")
    p.add_argument("file")

    p = add("jordan", _cmd_jordan, help="Jordan canonical form")
    p.add_argument("file")

    p = add("similar", _cmd_similar, help="decide similarity of two matrices")
    p.add_argument("file_a")
    p.add_argument("file_b")

    p = add("solve", _cmd_solve, help="solve A x = y exactly")
    p.add_argument("matrix")
    p.add_argument("vector")

    p = add("minpoly", _cmd_minpoly, help="minimal polynomial")
    p.add_argument("file")

    p = add("charpoly", _cmd_charpoly, help="characteristic polynomial")
    p.add_argument("file")

    p = add("perm", _cmd_perm, help="analyze a permutation in one-line notation")
    p.add_argument("oneline", help="comma-separated images, e.g. 4,2,1,3")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except Error as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())

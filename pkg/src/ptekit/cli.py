"""Command-line driver.

Exit codes: 0 success, 1 mathematical deviation / non-integral series /
no recurrence found, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import json
import re
import sys
from typing import Sequence

from . import cfinite, paperseq, pte, search
from .exactalg import PolyParseError, RationalGF, format_gf, parse_gf

EXIT_OK, EXIT_DEVIATION, EXIT_USAGE = 0, 1, 2

_NUMBER = re.compile(r"-?\d+(/\d+)?")


class UsageError(Exception):
    pass


def _cell(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def emit(rows: list[dict], fmt: str, out=None) -> None:
    """Write rows as JSON lines, CSV or an aligned table; every value is a string."""
    out = out or sys.stdout
    rows = [{k: _cell(v) for k, v in r.items()} for r in rows]
    if fmt == "json":
        for r in rows:
            out.write(json.dumps(r) + "\n")
        return
    if not rows:
        return
    cols = list(rows[0])
    if fmt == "csv":
        w = csv.DictWriter(out, fieldnames=cols, lineterminator="\r\n")
        w.writeheader()
        w.writerows(rows)
        return
    widths = {c: max(len(c), *(len(r[c]) for r in rows)) for c in cols}
    numeric = {c: all(_NUMBER.fullmatch(r[c]) for r in rows) for c in cols}

    def line(cells):
        return "  ".join(v.rjust(widths[c]) if numeric[c] else v.ljust(widths[c]) for c, v in zip(cols, cells))

    out.write(line(cols).rstrip() + "\n")
    for r in rows:
        out.write(line([r[c] for c in cols]).rstrip() + "\n")


def _gf_arg(text: str | None, label: str | None) -> RationalGF:
    if label is not None:
        if label not in paperseq.THEOREM_GF_TEXT:
            raise UsageError(f"unknown label {label!r}; choose from a..t")
        return parse_gf(paperseq.THEOREM_GF_TEXT[label])
    if text is None:
        raise UsageError("a generating function is required (--gf or --seed-paper)")
    return parse_gf(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _powers(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if any(j < 1 for j in out):
        raise UsageError("powers must be >= 1")
    return out


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


# -- subcommands -----------------------------------------------------------------


def cmd_expand(args) -> int:
    gf = _gf_arg(args.gf, args.seed_paper)
    try:
        values = cfinite.expand(gf, args.terms, rational=args.rational)
    except cfinite.NonIntegralSeries as exc:
        print(f"NonIntegralSeries: {exc} (use --rational)", file=sys.stderr)
        return EXIT_DEVIATION
    emit([{"index": i, "value": v} for i, v in enumerate(values)], args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    lo, hi, workers = args.min, args.max, args.workers
    t = args.target
    if t == "theorem":
        hi = 200 if hi is None else hi
        powers = _powers(args.powers)
        report = paperseq.verify_theorem(hi, powers, k_min=lo, workers=workers)
    elif t == "ramanujan":
        hi = 200 if hi is None else hi
        report = paperseq.verify_ramanujan(hi, n_min=lo, workers=workers)
    elif t == "closed-forms":
        hi = 200 if hi is None else hi
        report = paperseq.verify_closed_forms(hi, k_min=lo, workers=workers)
    elif t == "pell":
        hi = 1000 if hi is None else hi
        report = paperseq.verify_pell(hi, k_min=lo, workers=workers)
    else:
        report = paperseq.derive_H_forms()
    shown = report.records if args.all else report.deviations
    rows = [
        {"index": r.index, "label": r.label, "expected": r.expected, "actual": r.actual, "status": "pass" if r.ok else "FAIL"}
        for r in shown
    ]
    emit(rows, args.format)
    print(f"{report.target}: {report.checked} checks, {len(report.deviations)} deviations", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_DEVIATION


def cmd_chernick(args) -> int:
    t = pte.chernick(args.m, args.n)
    M, K = 1, 0
    if args.affine:
        vals = _int_list(args.affine)
        if len(vals) != 2:
            raise UsageError("--affine expects M,K")
        M, K = vals
    pair = pte.affine_transform(pte.chernick_pair(t), M, K)
    rows = [{"label": lab, "value": M * v + K} for lab, v in zip(pte.CHERNICK_LABELS, t.values())]
    rows.append({"label": "degree", "value": pair.degree})
    rows.append({"label": "ideal", "value": pte.is_ideal(pair)})
    emit(rows, args.format)
    if isinstance(pair.degree, pte.IdenticalMultisets):
        print(f"note: (m,n)=({args.m},{args.n}) gives identical multisets; not a PTE solution", file=sys.stderr)
    return EXIT_OK


def cmd_find_recurrence(args) -> int:
    terms = _int_list(args.terms)
    max_order = args.max_order if args.max_order is not None else max(1, (len(terms) - 2) // 2)
    try:
        seq = cfinite.find_recurrence(terms, max_order)
    except cfinite.InsufficientData as exc:
        raise UsageError(str(exc)) from None
    except cfinite.NotFound as exc:
        print(f"NotFound: {exc}", file=sys.stderr)
        return EXIT_DEVIATION
    rows = [
        {"field": "order", "value": seq.order},
        {"field": "recurrence", "value": seq.recurrence_text()},
        {"field": "rec", "value": ",".join(map(str, seq.rec))},
        {"field": "init", "value": ",".join(map(str, seq.init))},
        {"field": "gf", "value": format_gf(seq.gf)},
    ]
    emit(rows, args.format)
    return EXIT_OK


def cmd_hadamard(args) -> int:
    a = cfinite.to_recurrence(_gf_arg(args.gf1, args.seed_paper1))
    b = cfinite.to_recurrence(_gf_arg(args.gf2, args.seed_paper2))
    seq = cfinite.hadamard(a, b)
    rows = [
        {"field": "gf", "value": format_gf(seq.gf)},
        {"field": "gf_display", "value": format_gf(seq.gf, lead_positive=True)},
        {"field": "order", "value": seq.order},
        {"field": "recurrence", "value": seq.recurrence_text()},
        {"field": "init", "value": ",".join(map(str, seq.init))},
    ]
    emit(rows, args.format)
    return EXIT_OK


def cmd_search(args) -> int:
    try:
        spec = search.SearchSpec(
            args.size, args.bound, args.degree, allow_repeats=args.allow_repeats, normalize_translation=args.normalize_translation
        )
    except search.GuardrailError as exc:
        raise UsageError(str(exc)) from None
    pairs = search.find_ideal(spec, workers=args.workers)
    emit([{"A": p.A, "B": p.B, "degree": p.degree, "ideal": pte.is_ideal(p)} for p in pairs], args.format)
    print(f"search: {len(pairs)} pairs", file=sys.stderr)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ptekit", description="Exact C-finite and PTE identity toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("table", "json", "csv"), default="table")

    sp = sub.add_parser("expand", help="power-series coefficients of NUM/DEN")
    sp.add_argument("--gf")
    sp.add_argument("--seed-paper", metavar="LABEL", help="use the stated generating function for label a..t")
    sp.add_argument("--terms", type=_nonneg, default=10)
    sp.add_argument("--rational", action="store_true", help="emit exact rationals instead of failing")
    common(sp)
    sp.set_defaults(func=cmd_expand)

    sp = sub.add_parser("verify", help="check an identity over an index range")
    sp.add_argument("target", choices=("theorem", "ramanujan", "closed-forms", "h-forms", "pell"))
    sp.add_argument("--max-k", "--max-n", dest="max", type=_nonneg)
    sp.add_argument("--min-k", "--min-n", dest="min", type=_nonneg, default=0)
    sp.add_argument("--powers", default="1-5", help="exponents for 'theorem', e.g. 1-5 or 6")
    sp.add_argument("--workers", type=_positive, default=1)
    sp.add_argument("--all", action="store_true", help="print every check, not only deviations")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("chernick", help="the size-6 parametric family at (m, n)")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--affine", metavar="M,K")
    common(sp)
    sp.set_defaults(func=cmd_chernick)

    sp = sub.add_parser("find-recurrence", help="minimal linear recurrence for a list of terms")
    sp.add_argument("--terms", required=True)
    sp.add_argument("--max-order", type=_positive)
    common(sp)
    sp.set_defaults(func=cmd_find_recurrence)

    sp = sub.add_parser("hadamard", help="termwise product of two generating functions")
    sp.add_argument("--gf1")
    sp.add_argument("--gf2")
    sp.add_argument("--seed-paper1", metavar="LABEL")
    sp.add_argument("--seed-paper2", metavar="LABEL")
    common(sp)
    sp.set_defaults(func=cmd_hadamard)

    sp = sub.add_parser("search", help="enumerate PTE pairs in {0..bound}")
    sp.add_argument("--size", type=int, required=True)
    sp.add_argument("--bound", type=int, required=True)
    sp.add_argument("--degree", type=int, required=True)
    sp.add_argument("--allow-repeats", action="store_true")
    sp.add_argument("--normalize-translation", action="store_true")
    sp.add_argument("--workers", type=_positive, default=1)
    common(sp)
    sp.set_defaults(func=cmd_search)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, PolyParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

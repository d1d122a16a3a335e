"""Command-line front end.

Exit codes: 0 success, 1 verification mismatch, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Iterable, Optional, Sequence

from . import enumerator
from .checker import components, is_admissible_graph
from .geometry import InvalidComplexError, incidence_submatrix, rank_complex
from .linalg import determinant_exact, rank_exact
from .scrapbook import CplxParseError, build_scrapbook, parse_cplx, parse_inline
from .taxonomy import exact_omission_splits, formula_ledger, profile, verify_lemmas
from .transform import roundtrip_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _table(header: Sequence[str], rows: Iterable[Sequence], fmt: str) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, delimiter="\t" if fmt == "tsv" else ",", lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def cmd_enumerate(args) -> tuple[str, int]:
    ledger = enumerator.sweep_all(jobs=args.jobs, fast=args.fast)
    if args.format == "json":
        d = ledger.to_dict()
        d["authoritative"] = ledger.determinant_checked
        return _dump(d), EXIT_OK
    return _table(("key", "count"), ledger.rows(), args.format), EXIT_OK


def cmd_verify(args) -> tuple[str, int]:
    if args.fast:
        raise UsageError("--fast skips the determinant oracle and cannot be used with verify")
    ledger = enumerator.sweep_all(jobs=args.jobs)
    report = verify_lemmas(ledger)
    status = EXIT_OK if report.ok else EXIT_MISMATCH
    if args.format == "json":
        return _dump({
            "ok": report.ok,
            "admissible": ledger.admissible,
            "total": ledger.total,
            "oracle_disagreements": ledger.oracle_disagreements,
            "checks": [
                {"id": c.lemma_id, "description": c.description, "expected": c.expected,
                 "paper": c.paper, "observed": c.observed, "ok": c.ok}
                for c in report.checks
            ],
        }), status
    rows = [(c.lemma_id, c.expected, "" if c.paper is None else c.paper, c.observed,
             "pass" if c.ok else "FAIL") for c in report.checks]
    return _table(("check", "expected", "paper", "observed", "status"), rows, args.format), status


def _read_complex(source: str):
    path = Path(source)
    if path.suffix == ".cplx" or path.is_file():
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read {source}: {exc.strerror}") from None
        try:
            return parse_cplx(text)[0]
        except CplxParseError as exc:
            raise UsageError(f"{source}: {exc}") from None
    try:
        return parse_inline(source)
    except InvalidComplexError as exc:
        raise UsageError(f"invalid complex: {exc}") from None


def cmd_classify(args) -> tuple[str, int]:
    c = _read_complex(args.complex)
    p = profile(c)
    verdict = is_admissible_graph(c)
    m = incidence_submatrix(c)
    info = {
        "label": p.label.name,
        "admissible": verdict.admissible,
        "diagnosis": verdict.diagnosis(),
        "omitted_points": sorted(verdict.omitted_points),
        "bipartite_components": verdict.bipartite_components,
        "determinant": determinant_exact(m),
        "rank": rank_exact(m),
        "colex_rank": rank_complex(c),
        "lines": [list(pair) for pair in c.pairs],
        "components": [
            {"vertices": sorted(comp.vertices), "edges": comp.edge_count,
             "kind": comp.kind.name, "cycle_length": comp.cycle_length}
            for comp in components(c)
        ],
    }
    if args.format == "json":
        return _dump(info), EXIT_OK
    rows = [(k, json.dumps(v) if isinstance(v, (list, dict)) else v)
            for k, v in info.items() if k != "components"]
    return _table(("field", "value"), rows, args.format), EXIT_OK


def cmd_scrapbook(args) -> tuple[str, int]:
    out = Path(args.out or "scrapbook")
    build_scrapbook(args.per_label, out)
    return (out / "index.tsv").read_text(encoding="utf-8"), EXIT_OK


def cmd_recon(args) -> tuple[str, int]:
    result = roundtrip_suite(args.seed, args.samples)
    status = EXIT_OK if result["ok"] else EXIT_MISMATCH
    if args.format == "json":
        return _dump(result), status
    return _table(("key", "value"), sorted(result.items()), args.format), status


def cmd_formulas(args) -> tuple[str, int]:
    rows = formula_ledger()
    splits = exact_omission_splits()
    if args.format == "json":
        return _dump({
            "formulas": [{"id": f.lemma_id, "description": f.description,
                          "expression": f.expression, "value": f.value} for f in rows],
            "exact_omission_splits": splits,
        }), EXIT_OK
    return _table(("id", "value", "expression", "description"),
                  [(f.lemma_id, f.value, f.expression, f.description) for f in rows],
                  args.format), EXIT_OK


COMMANDS = {
    "enumerate": (cmd_enumerate, "sweep every complex and print the count ledger"),
    "verify": (cmd_verify, "dual-oracle sweep plus the lemma cross-check"),
    "classify": (cmd_classify, "label and diagnose one complex"),
    "scrapbook": (cmd_scrapbook, "write representative complexes per label"),
    "recon": (cmd_recon, "reconstruction round-trip checks on random complexes"),
    "formulas": (cmd_formulas, "print the closed-form count for every lemma"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, metavar="N",
                        help="worker processes for sweeps (default 1)")
    common.add_argument("--format", choices=("json", "csv", "tsv"), default="json")
    common.add_argument("--out", metavar="DIR", help="output directory (scrapbook)")
    common.add_argument("--seed", type=int, default=0, metavar="S", help="RNG seed (recon)")
    common.add_argument("--samples", type=int, default=1000, metavar="N",
                        help="complexes per recon check (default 1000)")
    common.add_argument("--fast", action="store_true",
                        help="graph oracle only; results are not authoritative")
    common.add_argument("--per-label", type=int, default=3, metavar="K",
                        help="representatives per label (scrapbook)")

    parser = argparse.ArgumentParser(
        prog="linecomplex",
        description="Admissible line complexes of the X-ray transform on F_2^3.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name == "classify":
            p.add_argument("complex", help="a .cplx file or inline pairs like '0 1,1 2,...'")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs < 1:
        parser.error("--jobs must be >= 1")
    if args.per_label < 1:
        parser.error("--per-label must be >= 1")
    if args.samples < 1:
        parser.error("--samples must be >= 1")
    if not 0 <= args.seed < 2**64:
        parser.error("--seed must be a 64-bit unsigned integer")
    handler = COMMANDS[args.command][0]
    try:
        text, status = handler(args)
    except UsageError as exc:
        print(f"linecomplex {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command-line surface: print spectra, build designs, verify documents.

Exit codes are a stable contract: 0 success/pass, 1 verification failure,
2 usage or parse error, 3 inadmissible tuple, 4 ingredient unavailable,
5 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .builder import build
from .core import ONE_FACTOR, Decomposition, verify
from .factorizations import (
    CycleFactorization,
    IngredientSource,
    IngredientUnavailable,
    SeedCatalogError,
    load_seed_catalog,
    validate_cycle_factorization,
)
from .serialization import DocumentFormatError, dumps_document, loads_document
from .spectrum import ParamTuple, admissible_pairs, check_necessary, inadmissibility_reason

SEED_DIR_ENV = "SUNURD_SEED_DIR"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_INADMISSIBLE = 3
EXIT_INGREDIENT = 4
EXIT_IO = 5


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunurd",
        description=(
            "Construct and verify uniformly resolvable decompositions of K_v "
            "into perfect matchings and sun factors."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("spectrum", help="print the admissible (r, s) pairs for (v, h)")
    sp.add_argument("--v", type=int, required=True, help="order of the complete graph")
    sp.add_argument("--h", type=int, required=True, help="sun cycle length")
    sp.add_argument("--format", choices=("text", "json"), default="text")
    sp.set_defaults(func=cmd_spectrum)

    bp = sub.add_parser("build", help="construct and write a verified design")
    bp.add_argument("--v", type=int, required=True)
    bp.add_argument("--h", type=int, required=True)
    bp.add_argument("--r", type=int, required=True, help="number of matching classes")
    bp.add_argument("--s", type=int, required=True, help="number of sun classes")
    bp.add_argument("--out", help="output path (default: stdout)")
    bp.add_argument("--format", choices=("json", "text"), default="json")
    bp.add_argument(
        "--seed-dir",
        help=f"directory of seed factorizations (default: ${SEED_DIR_ENV})",
    )
    bp.set_defaults(func=cmd_build)

    vp = sub.add_parser("verify", help="verify a design document")
    vp.add_argument("path", help="JSON document to check")
    vp.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    return args.func(args)


def cmd_spectrum(args) -> int:
    if args.v <= 0 or args.h < 3:
        print("spectrum needs a positive --v and --h of at least 3", file=sys.stderr)
        return EXIT_USAGE
    pairs = admissible_pairs(args.v, args.h)
    if args.format == "json":
        payload = {"v": args.v, "h": args.h, "pairs": [[p.r, p.s] for p in pairs]}
        if not pairs:
            payload["reason"] = inadmissibility_reason(args.v, args.h)
        print(json.dumps(payload, indent=2))
    elif pairs:
        print(" ".join(f"({p.r},{p.s})" for p in pairs))
    else:
        print(f"no admissible pairs: {inadmissibility_reason(args.v, args.h)}")
    return EXIT_OK


def _load_catalog(args):
    import os

    seed_dir = getattr(args, "seed_dir", None) or os.environ.get(SEED_DIR_ENV)
    if not seed_dir:
        return None
    return load_seed_catalog(seed_dir)


def _render_text(dec: Decomposition) -> str:
    lines = []
    for i, cls in enumerate(dec.classes):
        if cls.kind == ONE_FACTOR:
            blocks = " ".join(f"{{{u},{w}}}" for u, w in cls.edges)
        else:
            blocks = " ".join(str(s) for s in cls.suns)
        lines.append(f"class {i}: {blocks}")
    return "\n".join(lines) + "\n"


def cmd_build(args) -> int:
    t = ParamTuple(args.v, args.h, args.r, args.s)
    adm = check_necessary(t)
    if not adm.ok:
        print(f"{adm.reason.value}: {adm.detail}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    try:
        catalog = _load_catalog(args)
    except OSError as exc:
        print(f"cannot read seed catalog: {exc}", file=sys.stderr)
        return EXIT_IO
    except SeedCatalogError as exc:
        print(f"bad seed catalog: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        dec = build(t, source=IngredientSource(catalog=catalog))
    except IngredientUnavailable as exc:
        print(f"ingredient-unavailable: {exc}", file=sys.stderr)
        return EXIT_INGREDIENT
    text = _render_text(dec) if args.format == "text" else dumps_document(dec, h=args.h)
    if args.out:
        try:
            Path(args.out).write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"(r,s)=({args.r},{args.s}) written to {args.out}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"cannot read {args.path}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        doc = loads_document(text)
    except DocumentFormatError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if isinstance(doc.payload, CycleFactorization):
        report = validate_cycle_factorization(doc.payload)
        summary = (
            f"cycle-factorization: {len(doc.payload.classes)} classes "
            f"of {doc.payload.h}-cycles"
        )
    else:
        report = verify(doc.payload, expected_h=doc.h)
        summary = f"(r,s)=({report.r},{report.s})"
    if report.passed:
        print(summary)
        return EXIT_OK
    for finding in report.violations:
        print(str(finding))
    return EXIT_VERIFY_FAILED


if __name__ == "__main__":
    sys.exit(main())

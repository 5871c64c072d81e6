"""
Command Line
affine-kl entry point: primitive tables, KL polynomials, the lowest cell, verification runs, lemma suites and Lusztig's identity
"""

import argparse
import json
import logging
import sys
from typing import List, Optional, Sequence

import pandas as pd

from affine_weyl.element_grammar import format_element, parse_element
from affine_weyl.errors import AffineKLError
from affine_weyl.root_datum import parse_datum
from bernstein_characters.bernstein import lusztig_sides
from bernstein_characters.weights import Weight
from hecke_algebra.kl_basis import KLCache, kl_basis
from hecke_algebra.serialization import kl_record_to_dict
from primitive_cells.primitive_elements import primitive_table

from .cell_enumeration import enumerate_lowest_cell
from .kl_store import KLStore
from .lemma_suite import run_lemma_suite
from .reports import MODE_COROLLARY, MODE_THEOREM, run_verification, write_report
from .settings import DEFAULT_DATUM, DEFAULT_MAX_COORD, DEFAULT_SEED, Settings, SuiteConfig, load_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _weight_list(text: str) -> List[int]:
    try:
        return [int(c) for c in text.replace(" ", "").split(",") if c != ""]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got '{text}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affine-kl",
        description="Kazhdan-Lusztig bases of extended affine Hecke algebras and the lowest two-sided cell",
    )
    parser.add_argument("--datum", default=DEFAULT_DATUM, help="root datum: SL:n, GL:n or cartan:[[...]] (default SL:3)")
    parser.add_argument("--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    primitive = commands.add_parser("primitive", help="print the primitive elements")
    primitive.add_argument("--group-by", choices=["pi"], default=None, help="order rows by pi exponent")
    primitive.add_argument("--format", choices=["table", "json"], default="table")

    klpoly = commands.add_parser("klpoly", help="print the canonical basis element C_w")
    klpoly.add_argument("--elt", required=True, help="element, e.g. 'pi^2 s2 s0 s1' or '[5,2,4,7]'")
    klpoly.add_argument("--json", action="store_true", help="print the KL record as JSON")

    cell = commands.add_parser("cell", help="enumerate the lowest two-sided cell")
    cell.add_argument("--max-len", type=int, required=True)
    cell.add_argument("--max-coord", type=int, default=None, help="bound on the coordinates of lambda")

    verify = commands.add_parser("verify", help="verify the factorization of C_w over the lowest cell")
    verify.add_argument("--max-len", type=int, required=True)
    verify.add_argument("--max-coord", type=int, default=DEFAULT_MAX_COORD)
    verify.add_argument("--jobs", type=int, default=1)
    verify.add_argument("--json", dest="json_path", default=None, help="write the report to this path")
    verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    verify.add_argument("--count", type=int, default=0, help="verify a seeded sample of this many elements (0 = all)")
    verify.add_argument("--timings", action="store_true", help="record per-element timings")
    verify.add_argument("--theorem", action="store_true", help="check C_{v1 w0 v2} = C<-_{v1} C_{w0} C->_{v2} instead")

    lemmas = commands.add_parser("lemmas", help="run the lemma property suite")
    lemmas.add_argument("--seed", type=int, default=DEFAULT_SEED)
    lemmas.add_argument("--count", type=int, default=100)
    lemmas.add_argument("--max-len", type=int, default=0, help="length of random words (default 5)")
    lemmas.add_argument("--json", dest="json_path", default=None, help="write the report to this path")

    lusztig = commands.add_parser("lusztig", help="check C_{w0 y^lambda} = chi_lambda(Y) C_{w0} = C_{w0} chi_lambda(Y)")
    lusztig.add_argument("--lambda", dest="lam", type=_weight_list, required=True, help="c1,...,cn in fundamental weights")
    return parser


def _make_cache(settings: Settings) -> KLCache:
    store = KLStore(settings.cache_dir) if settings.cache_dir else None
    return KLCache(length_cap=settings.length_cap, store=store)


def run_primitive(args, settings: Settings) -> int:
    table = primitive_table(parse_datum(args.datum), group_by_pi=args.group_by == "pi")
    if args.format == "json":
        print(table.to_json(orient="records", indent=2))
    else:
        print(table.to_string(index=False))
    return EXIT_OK


def run_klpoly(args, settings: Settings) -> int:
    datum = parse_datum(args.datum)
    w = parse_element(args.elt, datum)
    record = kl_basis(w, _make_cache(settings))
    if args.json:
        print(json.dumps(kl_record_to_dict(record), indent=2, sort_keys=True))
        return EXIT_OK
    rows = [
        {"x": format_element(x), "length": x.length, "P'": str(c)}
        for x, c in record.element().sorted_terms()
    ]
    print(f"C_{{{format_element(w)}}} on {datum.selector}: {len(rows)} terms")
    print(pd.DataFrame(rows).to_string(index=False))
    return EXIT_OK


def run_cell(args, settings: Settings) -> int:
    datum = parse_datum(args.datum)
    rows = [
        {
            "w": format_element(cf.w),
            "length": cf.w.length,
            "v1": format_element(cf.v1),
            "lambda": str(Weight.from_y(datum, cf.lam)),
            "v2": format_element(cf.v2),
        }
        for cf in enumerate_lowest_cell(datum, args.max_len, args.max_coord)
    ]
    if rows:
        print(pd.DataFrame(rows).to_string(index=False))
    print(f"{len(rows)} elements")
    return EXIT_OK


def run_verify(args, settings: Settings) -> int:
    config = SuiteConfig(
        datum=parse_datum(args.datum).selector,
        max_len=args.max_len,
        seed=args.seed,
        count=args.count,
        jobs=args.jobs,
        output=args.json_path,
        max_coord=args.max_coord,
        record_timings=args.timings,
        length_cap=settings.length_cap,
        dimension_cap=settings.dimension_cap,
    )
    report = run_verification(config, MODE_THEOREM if args.theorem else MODE_COROLLARY, settings.cache_dir)
    if args.json_path:
        write_report(report, args.json_path)
    summary = report["summary"]
    print(
        f"{summary['total']} checked: {summary['matched']} matched, "
        f"{summary['mismatched']} mismatched, {summary['skipped']} skipped"
    )
    for result in report["results"]:
        if result["status"] != "match":
            print(f"  {result['status']}: {result['w']} {result['reason'] or ''}".rstrip())
    return EXIT_FAILURE if summary["mismatched"] else EXIT_OK


def run_lemmas(args, settings: Settings) -> int:
    config = SuiteConfig(
        datum=parse_datum(args.datum).selector,
        max_len=args.max_len,
        seed=args.seed,
        count=args.count,
        output=args.json_path,
        length_cap=settings.length_cap,
        dimension_cap=settings.dimension_cap,
    )
    report = run_lemma_suite(config)
    if args.json_path:
        write_report(report, args.json_path)
    rows = [
        {
            "lemma": r["lemma"],
            "checked": r["checked"],
            "failures": len(r["failures"]),
            "note": r["skipped"] or "",
        }
        for r in report["results"]
    ]
    print(pd.DataFrame(rows).to_string(index=False))
    for r in report["results"]:
        for instance in r["failures"][:5]:
            print(f"  {r['lemma']}: {instance}")
    return EXIT_FAILURE if report["summary"]["failed"] else EXIT_OK


def run_lusztig(args, settings: Settings) -> int:
    datum = parse_datum(args.datum)
    lam = Weight(datum, tuple(args.lam))
    check = lusztig_sides(lam, _make_cache(settings), settings.dimension_cap)
    print(f"lambda = {lam}: C_(w0 y^lambda) has {len(check.kl_side)} terms")
    print(f"  chi_lambda(Y) C_w0 {'=' if check.left_side == check.kl_side else '!='} C_(w0 y^lambda)")
    print(f"  C_w0 chi_lambda(Y) {'=' if check.right_side == check.kl_side else '!='} C_(w0 y^lambda)")
    return EXIT_OK if check.holds else EXIT_FAILURE


COMMANDS = {
    "primitive": run_primitive,
    "klpoly": run_klpoly,
    "cell": run_cell,
    "verify": run_verify,
    "lemmas": run_lemmas,
    "lusztig": run_lusztig,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        settings = load_settings()
    except AffineKLError as e:
        print(f"affine-kl: {e}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else settings.log_level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )

    try:
        return COMMANDS[args.command](args, settings)
    except AffineKLError as e:
        logger.debug("command failed", exc_info=True)
        print(f"affine-kl: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

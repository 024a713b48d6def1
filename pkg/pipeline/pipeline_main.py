"""
Shunya command line
classify / spectrum / verify / export / all for one finite field

    python -m pipeline.pipeline_main verify --field 3 --scope all
    python -m pipeline.pipeline_main export --field 2 --graph gamma --format dot --out gamma.dot
"""

import argparse
import json
import logging
import sys

from pipeline.classify_handler import rows_table, run_classify
from pipeline.export_handler import run_export
from pipeline.full_pipeline import run_pipeline
from pipeline.spectrum_handler import GRAPHS, run_spectrum
from pipeline.verify_handler import SCOPES, run_verify
from utils import config
from utils.export import FORMATS

logger = logging.getLogger(__name__)


def _dump(result):
    return json.dumps(result, sort_keys=True, indent=2, default=str)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", required=True, help="q, p^k or p^k:modulus-hex")
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--exact-cap", type=int, default=None, help="largest dimension for exact characteristic polynomials")
    common.add_argument("--json", action="store_true", help="same as --format json")
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="shunya", description="Zero-divisor graphs of M2(F) and their spectra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common])
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("spectrum", parents=[common])
    p.add_argument("--graph", choices=GRAPHS, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--scope", choices=SCOPES, default="all")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("export", parents=[common])
    p.add_argument("--graph", choices=GRAPHS, required=True)
    p.add_argument("--format", choices=FORMATS, required=True)
    p.add_argument("--out", required=True)

    p = sub.add_parser("all", parents=[common])
    p.add_argument("--format", choices=("text", "json"), default="text")
    return parser


# ================= Printers =================
def _print_error(result):
    print(f"❌ {result.get('error_type', 'error')}: {result['error']}", file=sys.stderr)


def print_classify(result):
    print(f"\n📐 Classes of Z(M2({result['field']}))\n")
    print(rows_table(result["rows"]))
    c = result["counts"]
    mark = "✅" if result["ok"] else "❌"
    print(f"\n{mark} {c['zero_divisors']} zero-divisors, {c['classes']} classes, {c['nilpotent_classes']} nilpotent")


def print_spectrum(result):
    print(f"\n🔢 σ({result['graph']}) over {result['field']} ({result['order']} vertices, {result['method']})\n")
    for value, mult in result["multiplicities"].items():
        print(f"  {value:>24}  ×{mult}")
    mark = "✅" if result["matches_closed_form"] else "❌"
    print(f"\n{mark} closed form {result['closed_form']}")
    if result.get("printed_difference"):
        print(f"⚠️  printed form differs: {result['printed_difference']}")
    print(f"   eigh residual {result['numeric_residual']:.2e}")


def print_verify(result):
    report = result["report"]
    print(f"\n🧪 Verification over {result['field']} (scope {result['scope']})\n")
    print(report.to_text())
    for claim in report.failed():
        print(f"❌ {claim['claim']}")
    print("\n🎉 ALL CHECKS PASSED\n" if report.ok else "\n⚠️  SOME CHECKS FAILED\n")


def print_export(result):
    print(f"💾 {result['graph']} → {result['path']} ({result['format']}, {result['vertices']} vertices, "
          f"{result['edges']} edges, {result['loops']} loops)")


def print_pipeline(result):
    print_classify(result["classify"])
    for spectrum in result["spectra"].values():
        if "error" in spectrum:
            _print_error(spectrum)
        else:
            print_spectrum(spectrum)
    print_verify(result["verify"])


def _jsonable(command, result):
    if command == "verify":
        return result["report"].to_dict()
    if command == "all":
        return {**result, "verify": result["verify"]["report"].to_dict()}
    return result


# ================= Entry point =================
def main(argv=None):
    args = build_parser().parse_args(argv)
    config.configure_logging("DEBUG" if args.verbose else None)

    if args.command == "classify":
        result = run_classify(args.field)
    elif args.command == "spectrum":
        result = run_spectrum(args.field, args.graph, args.seed, args.exact_cap)
    elif args.command == "verify":
        result = run_verify(args.field, args.scope, args.seed, args.exact_cap)
    elif args.command == "export":
        result = run_export(args.field, args.graph, args.format, args.out)
    else:
        result = run_pipeline(args.field, args.seed, args.exact_cap)

    if "error" in result:
        _print_error(result)
        return result["exit_code"]

    as_json = args.json or args.format == "json"
    if as_json and args.command != "export":
        print(_dump(_jsonable(args.command, result)))
    else:
        {
            "classify": print_classify,
            "spectrum": print_spectrum,
            "verify": print_verify,
            "export": print_export,
            "all": print_pipeline,
        }[args.command](result)
    return result["exit_code"]


if __name__ == "__main__":
    sys.exit(main())

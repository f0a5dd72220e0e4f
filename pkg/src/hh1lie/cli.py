"""Command line interface.

Subcommands:
  build       construct a named algebra and emit its canonical JSON
  hh1         compute the first-cohomology report, the induced restricted
              Lie algebra and its fingerprint
  reproduce   run the registered verification suite

Exit codes: 0 success, 1 check failure, 2 usage error, 3 input validation
error.  Output is deterministic for fixed flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import algebras as alg
from . import checks as checkmod
from . import hochschild as hoch
from . import lie as lielib
from .algebras import dumps_canonical
from .errors import Hh1LieError, JsonFormatError
from .gfp import check_prime

EXIT_CHECK_FAILURE = 1
EXIT_USAGE = 2
EXIT_INVALID_INPUT = 3


def _parse_exps(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse exponent list {text!r}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hh1lie",
        description="Exact GF(p) algebra constructions, derivations and first cohomology.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_algebra_flags(p):
        p.add_argument(
            "--kind",
            choices=["smash", "trunc", "quiver", "trivext", "u0borel", "json"],
            required=True,
            help="algebra family to build",
        )
        p.add_argument("--p", type=int, default=3, help="odd prime >= 3 (default 3)")
        p.add_argument("--n", type=int, help="x-height parameter (smash, u0borel)")
        p.add_argument("--r", type=int, help="character group height (smash)")
        p.add_argument("--exps", type=_parse_exps, help="truncation exponents, e.g. '2' or '1,1'")
        p.add_argument("--file", help="input JSON (kind=json, or a quiver presentation)")
        p.add_argument("--json", dest="json_out", help="write output JSON to a file")

    b = sub.add_parser("build", help="build an algebra and print its JSON")
    add_algebra_flags(b)

    h = sub.add_parser("hh1", help="first cohomology report for an algebra")
    add_algebra_flags(h)
    h.add_argument("--seed", type=int, default=0)

    r = sub.add_parser("reproduce", help="run the verification suite")
    r.add_argument("--p", type=int, default=3, choices=[3, 5])
    r.add_argument("--seed", type=int, default=0)
    r.add_argument("--json", dest="json_out", help="write the JSON report to a file")
    r.add_argument("--md", dest="md_out", help="write the markdown table to a file")
    r.add_argument("--inject-fault", help=argparse.SUPPRESS)
    return parser


def _load_quiver(path: str) -> alg.QuiverPresentation:
    with open(path, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    try:
        relations = tuple(
            tuple((int(c), list(pth)) for c, pth in rel) for rel in data.get("relations", [])
        )
        return alg.QuiverPresentation(
            tuple(data["vertices"]),
            tuple((a[0], a[1], a[2]) for a in data["arrows"]),
            relations,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise JsonFormatError(f"bad quiver presentation: {exc}") from exc


def _build_algebra(args, parser) -> alg.Algebra:
    try:
        p = check_prime(args.p)
    except ValueError as exc:
        parser.error(str(exc))  # exits 2
    if args.kind == "smash":
        if args.n is None or args.r is None:
            parser.error("--kind smash needs --n and --r")
        a, _ = alg.smash_product(p, args.n, args.r)
        return a
    if args.kind == "trunc":
        if not args.exps:
            parser.error("--kind trunc needs --exps")
        return alg.truncated_polynomial(p, args.exps)
    if args.kind == "u0borel":
        if args.n is None:
            parser.error("--kind u0borel needs --n")
        return alg.u0_borel(p, args.n)
    if args.kind == "quiver":
        pres = _load_quiver(args.file) if args.file else alg.tkr_quiver()
        return alg.quiver_algebra(pres, p)
    if args.kind == "trivext":
        return alg.trivial_extension(alg.quiver_algebra(alg.kronecker_quiver(), p))
    # kind == json
    if not args.file:
        parser.error("--kind json needs --file")
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    return alg.algebra_from_json_dict(data)


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "build":
        try:
            a = _build_algebra(args, parser)
        except (JsonFormatError, json.JSONDecodeError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID_INPUT
        except Hh1LieError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID_INPUT
        except ValueError as exc:
            parser.error(str(exc))
        _emit(dumps_canonical(a.to_json_dict()), args.json_out)
        return 0
    if args.command == "hh1":
        try:
            a = _build_algebra(args, parser)
            pres = hoch.hh1(a, seed=args.seed)
        except (JsonFormatError, json.JSONDecodeError, OSError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID_INPUT
        except Hh1LieError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_INVALID_INPUT
        except ValueError as exc:
            parser.error(str(exc))
        L = lielib.from_hh1(pres)
        fp = lielib.fingerprint(L, seed=args.seed)
        payload = {
            "report": pres.to_report_dict(),
            "lie": L.to_json_dict(),
            "fingerprint": fp.to_json_dict(),
        }
        _emit(dumps_canonical(payload), args.json_out)
        return 0
    # reproduce
    results = checkmod.run_suite(p=args.p, seed=args.seed, inject_fault=args.inject_fault)
    md = checkmod.render_markdown(results)
    sys.stdout.write(md)
    if args.md_out:
        _emit(md, args.md_out)
    if args.json_out:
        _emit(dumps_canonical([r.to_json_dict() for r in results]), args.json_out)
    failures = [r for r in results if r.status == "fail"]
    for r in failures:
        print(f"FAIL {r.check_id}: {json.dumps(r.details, sort_keys=True)[:400]}", file=sys.stderr)
    return EXIT_CHECK_FAILURE if failures else 0


if __name__ == "__main__":
    sys.exit(main())

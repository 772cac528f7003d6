"""Command-line front end.

Commands:

    construct   build the 20-generator ideal (generic) or a family ideal
    verify      run a verification suite and emit a JSON report
    gb          reduced Groebner basis of an ideal file
    dim         dimension / codimension of an ideal file
    hilbert     Hilbert series of an ideal file

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or input error.
Reports are deterministic: identical configuration gives byte-identical
output.  The environment variable UNPROJ_THREADS caps concurrent family
verifications for ``verify --family all`` (default 1).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from . import __version__, engine, serialize
from .dimension import UnitIdealError, codimension, dimension
from .fano import (
    FAMILY_CHECKS,
    FAMILY_IDS,
    UnknownFamilyError,
    build_family,
    family_spec,
    verify_family,
)
from .fields import field_from_name
from .hilbert import hilbert_series
from .parsing import PolyParseError
from .unprojection import base_unprojection
from .verification import GENERIC_CHECKS, generic_checks


class UsageError(ValueError):
    pass


def _parse_field(name: str):
    try:
        return field_from_name(name)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _parse_checks(text, allowed):
    if text is None:
        return None
    names = [c.strip() for c in text.split(",") if c.strip()]
    for c in names:
        if c not in allowed:
            raise UsageError(f"unknown check {c!r}; known: {', '.join(allowed)}")
    if not names:
        raise UsageError("empty check list")
    return names


def _check_json(result):
    return {
        "name": result.name,
        "expected": result.expected,
        "computed": result.computed,
        "pass": result.passed,
    }


def _emit(report: dict, out_path, verbose: bool, checks) -> None:
    if verbose:
        for c in checks:
            status = "PASS" if c["pass"] else "FAIL"
            print(f"{c['name']}: {status}", file=sys.stderr)
    text = serialize.dumps(report)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _family_payload(fid: int, seed: int, field, checks, ideal_override):
    instance = build_family(fid, seed, field)
    if ideal_override is not None:
        if ideal_override.ring != instance.ambient:
            raise UsageError(
                f"ideal file ring does not match the ambient ring of family {fid}"
            )
        instance.Q = ideal_override
    results = verify_family(instance, checks or FAMILY_CHECKS)
    payload = {
        "family": fid,
        "checks": [_check_json(r) for r in results],
        "pass": all(r.passed for r in results),
        "provenance": {
            "seed": seed,
            "field": field.name,
            "c_assignment": dict(sorted(instance.c_assignment.items())),
            "l_assignment": list(instance.l_assignment),
            "tool_version": __version__,
        },
    }
    return payload


def _cmd_verify(args) -> int:
    field = _parse_field(args.field)
    ideal_override = serialize.load_ideal(args.ideal) if args.ideal else None
    if args.generic:
        checks = _parse_checks(args.checks, GENERIC_CHECKS)
        results, provenance = generic_checks(
            field, args.seed, checks, iun_ideal=ideal_override
        )
        provenance["tool_version"] = __version__
        check_dicts = [_check_json(r) for r in results]
        report = {
            "command": "verify",
            "target": "generic",
            "seed": args.seed,
            "field": field.name,
            "checks": check_dicts,
            "pass": all(r.passed for r in results),
            "provenance": provenance,
        }
        _emit(report, args.out, args.verbose, check_dicts)
        return 0 if report["pass"] else 1
    if args.family == "all":
        if ideal_override is not None:
            raise UsageError("--ideal cannot be combined with --family all")
        checks = _parse_checks(args.checks, FAMILY_CHECKS)
        workers = max(1, int(os.environ.get("UNPROJ_THREADS", "1")))
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_family_payload, fid, args.seed, field, checks, None)
                for fid in FAMILY_IDS
            ]
            payloads = [f.result() for f in futures]
        payloads.sort(key=lambda p: p["family"])
        report = {
            "command": "verify",
            "target": "all",
            "seed": args.seed,
            "field": field.name,
            "families": payloads,
            "pass": all(p["pass"] for p in payloads),
        }
        flat = [c for p in payloads for c in p["checks"]]
        _emit(report, args.out, args.verbose, flat)
        return 0 if report["pass"] else 1
    try:
        fid = int(args.family)
    except ValueError:
        raise UsageError(f"unknown family {args.family!r}") from None
    checks = _parse_checks(args.checks, FAMILY_CHECKS)
    payload = _family_payload(fid, args.seed, field, checks, ideal_override)
    report = {
        "command": "verify",
        "target": str(fid),
        "seed": args.seed,
        "field": field.name,
        "checks": payload["checks"],
        "pass": payload["pass"],
        "provenance": payload["provenance"],
    }
    _emit(report, args.out, args.verbose, payload["checks"])
    return 0 if report["pass"] else 1


def _cmd_construct(args) -> int:
    field = _parse_field(args.field)
    if args.generic:
        ideal = base_unprojection(field).ideal
    else:
        fid = int(args.family)
        family_spec(fid)
        ideal = build_family(fid, args.seed, field).Q
    serialize.write_json(args.out, serialize.ideal_to_json(ideal))
    return 0


def _cmd_gb(args) -> int:
    ideal = serialize.load_ideal(args.ideal)
    order = ideal.ring.order(args.order)
    basis = engine.groebner_basis(ideal.generators, order)
    obj = {
        "ring": serialize.ring_to_json(ideal.ring),
        "gens": [serialize.format_poly(g, order) for g in basis],
    }
    if args.out:
        serialize.write_json(args.out, obj)
    else:
        sys.stdout.write(serialize.dumps(obj))
    return 0


def _cmd_dim(args) -> int:
    ideal = serialize.load_ideal(args.ideal)
    obj = {"dimension": dimension(ideal), "codimension": codimension(ideal)}
    if args.out:
        serialize.write_json(args.out, obj)
    else:
        sys.stdout.write(serialize.dumps(obj))
    return 0


def _cmd_hilbert(args) -> int:
    ideal = serialize.load_ideal(args.ideal)
    obj = serialize.hilbert_to_json(hilbert_series(ideal))
    if args.out:
        serialize.write_json(args.out, obj)
    else:
        sys.stdout.write(serialize.dumps(obj))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unproj",
        description="construct and verify the 4-intersection unprojection families",
    )
    parser.add_argument("--version", action="version", version=f"unproj {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_checks=False):
        p.add_argument("--seed", type=int, default=0, help="seed for general coefficients")
        p.add_argument("--field", default="Fp:32003", help='"QQ" or "Fp:<prime>"')
        p.add_argument("--out", help="write the JSON output to this path")
        if with_checks:
            p.add_argument("--checks", help="comma-separated subset of checks")
            p.add_argument("--ideal", help="re-ingest an ideal file instead of rebuilding")
            p.add_argument("-v", "--verbose", action="store_true",
                           help="per-check lines on stderr")

    p_verify = sub.add_parser("verify", help="run a verification suite")
    target = p_verify.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", help="family id or 'all'")
    target.add_argument("--generic", action="store_true",
                        help="verify the base construction")
    add_common(p_verify, with_checks=True)
    p_verify.set_defaults(func=_cmd_verify)

    p_construct = sub.add_parser("construct", help="serialize a constructed ideal")
    target = p_construct.add_mutually_exclusive_group(required=True)
    target.add_argument("--family", help="family id")
    target.add_argument("--generic", action="store_true",
                        help="the symbolic 20-generator ideal")
    add_common(p_construct)
    p_construct.set_defaults(func=_cmd_construct)

    for name, func, help_text in (
        ("gb", _cmd_gb, "reduced Groebner basis of an ideal file"),
        ("dim", _cmd_dim, "dimension and codimension of an ideal file"),
        ("hilbert", _cmd_hilbert, "Hilbert series of a homogeneous ideal file"),
    ):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--ideal", required=True, help="ideal JSON file")
        p.add_argument("--out", help="write the JSON output to this path")
        if name == "gb":
            p.add_argument("--order", default="grevlex", choices=("lex", "grevlex"))
        p.set_defaults(func=func)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0)
    if args.command == "construct" and not args.out:
        print("error: construct requires --out", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (UsageError, UnknownFamilyError, UnitIdealError, PolyParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

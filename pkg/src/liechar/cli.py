"""Command-line front end.

Exit status: 0 success, 2 verification failure, 3 solver error, 4 usage or
input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from itertools import product
from pathlib import Path
from typing import Sequence

from liechar.cache import ResultCache
from liechar.errors import LiecharError, SchemaError, UnsupportedAlgebra
from liechar.genfun import (
    dim_genfun,
    generating_function,
    ray_genfun,
    recurrence_from_denominator,
    verify_pde,
)
from liechar.lie_core import Algebra, dimension, parse_algebra
from liechar.operator import build_operator, delta_t
from liechar.serialize import (
    SCHEMA_VERSION,
    dumps,
    genfun_from_json,
    genfun_to_json,
    poly_from_json,
    poly_to_json,
    tpoly_from_json,
)
from liechar.poly import Poly, TPoly
from liechar.solver import character_z

EXIT_OK = 0
EXIT_UNVERIFIED = 2
EXIT_SOLVER = 3
EXIT_USAGE = 4

MAX_CLI_RANK = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _algebra(name: str) -> Algebra:
    try:
        alg = parse_algebra(name)
    except UnsupportedAlgebra as exc:
        raise UsageError(str(exc)) from exc
    if alg.rank > MAX_CLI_RANK:
        raise UsageError(f"rank {alg.rank} exceeds the CLI limit of {MAX_CLI_RANK}")
    return alg


def _direction(text: str | None, alg: Algebra) -> tuple[int, ...] | None:
    if text is None:
        return None
    try:
        c = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"cannot parse direction {text!r}") from exc
    if len(c) != alg.rank or any(x not in (0, 1) for x in c) or not any(c):
        raise UsageError(f"direction must be a non-zero 0/1 vector of length {alg.rank}")
    return c


def _znames(r: int) -> list[str]:
    return [f"z{i + 1}" for i in range(r)]


def _tnames(nt: int) -> list[str]:
    return ["t"] if nt == 1 else [f"t{i + 1}" for i in range(nt)]


def _series_str(data: list, nt: int) -> str:
    """Render an integer t-polynomial in ascending order, like N and D."""
    p = poly_from_json(data, nt)
    return TPoly(nt, 0, {e: Poly.constant(0, c) for e, c in p.terms.items()}).to_str(_tnames(nt), [])


# ---- payload builders (return canonical JSON text) -------------------------


def chars_payload(alg: Algebra, max_coord: int) -> str:
    rows = []
    for m in product(range(max_coord + 1), repeat=alg.rank):
        rows.append({"weight": list(m), "poly": poly_to_json(character_z(alg, m).poly)})
    return dumps({"schema_version": SCHEMA_VERSION, "algebra": alg.name, "max": max_coord, "characters": rows})


def genfun_payload(alg: Algebra, direction, timings: bool = False) -> str:
    res = generating_function(alg) if direction is None else ray_genfun(alg, direction)
    return dumps(genfun_to_json(res, timings=timings))


def operator_payload(alg: Algebra) -> str:
    doc = build_operator(alg).to_json()
    dt = delta_t(alg)
    doc["delta_t"] = {
        "second": [{"j": j + 1, "k": k + 1, "poly": poly_to_json(p)} for (j, k), p in sorted(dt.second.items())],
        "first": [{"j": j + 1, "poly": poly_to_json(p)} for j, p in sorted(dt.first.items())],
    }
    doc["schema_version"] = SCHEMA_VERSION
    return dumps(doc)


def dims_payload(alg: Algebra, order: int) -> str:
    P, Q = dim_genfun(alg)
    rows = [{"weight": list(m), "dim": str(dimension(alg, m))} for m in product(range(order + 1), repeat=alg.rank)]
    return dumps({
        "schema_version": SCHEMA_VERSION,
        "algebra": alg.name,
        "order": order,
        "dimensions": rows,
        "dim_P": poly_to_json(P),
        "dim_Q": poly_to_json(Q),
    })


def recurrence_payload(alg: Algebra, axis: int) -> str:
    rec = recurrence_from_denominator(alg, axis - 1)
    return dumps({
        "schema_version": SCHEMA_VERSION,
        "algebra": alg.name,
        "axis": axis,
        "coefficients": [poly_to_json(c) for c in rec.coefficients],
        "onset": rec.onset,
        "axis_numerator": [poly_to_json(c) for c in rec.numerator],
    })


# ---- text renderers ------------------------------------------------------


def render_text(command: str, doc: dict) -> str:
    alg = parse_algebra(doc["algebra"])
    r = alg.rank
    Z = _znames(r)
    lines = [f"algebra: {alg.name}"]
    if command == "chars":
        for row in doc["characters"]:
            w = ",".join(str(x) for x in row["weight"])
            lines.append(f"chi({w}) = {poly_from_json(row['poly'], r).to_str(Z)}")
    elif command in ("genfun", "verify"):
        direction = doc.get("direction")
        nt = r if direction is None else 1
        T = _tnames(nt)
        lines.append("direction: " + ("full" if direction is None else ",".join(map(str, direction))))
        if "numerator" in doc:
            lines.append("N = " + tpoly_from_json(doc["numerator"], nt, r).to_str(T, Z))
            lines.append("D = " + tpoly_from_json(doc["denominator"], nt, r).to_str(T, Z))
            lines.append("P = " + _series_str(doc["dim_P"], nt))
            lines.append("Q = " + _series_str(doc["dim_Q"], nt))
            lines.append("support: " + " ".join("(" + ",".join(map(str, s)) + ")" for s in doc["support"]))
        lines.append(f"verified: {'true' if doc['verified'] else 'false'}")
    elif command == "operator":
        for item in doc["a"]:
            j, k = item["j"], item["k"]
            d = f"d{Z[j - 1]}^2" if j == k else f"d{Z[j - 1]}*d{Z[k - 1]}"
            lines.append(f"{d}: {poly_from_json(item['poly'], r).to_str(Z)}")
        for item in doc["b"]:
            lines.append(f"d{Z[item['j'] - 1]}: {poly_from_json(item['poly'], r).to_str(Z)}")
        T = _tnames(r)
        for item in doc["delta_t"]["second"]:
            j, k = item["j"], item["k"]
            d = f"d{T[j - 1]}^2" if j == k else f"d{T[j - 1]}*d{T[k - 1]}"
            lines.append(f"delta_t {d}: {poly_from_json(item['poly'], r).to_str(T)}")
        for item in doc["delta_t"]["first"]:
            lines.append(f"delta_t d{T[item['j'] - 1]}: {poly_from_json(item['poly'], r).to_str(T)}")
    elif command == "dims":
        for row in doc["dimensions"]:
            lines.append(f"dim({','.join(map(str, row['weight']))}) = {row['dim']}")
        lines.append("P = " + _series_str(doc["dim_P"], r))
        lines.append("Q = " + _series_str(doc["dim_Q"], r))
    elif command == "recurrence":
        coeffs = [poly_from_json(c, r).to_str(Z) for c in doc["coefficients"]]
        lines.append(f"axis: {doc['axis']}")
        lines.append("coefficients: " + " | ".join(coeffs))
        lines.append(f"onset: {doc['onset']}")
    return "\n".join(lines) + "\n"


# ---- command dispatch ------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="liechar", description="Characters and character generating functions of simple Lie algebras.")
    parser.add_argument("--no-cache", action="store_true", help="bypass the on-disk result cache")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, algebra=True):
        if algebra:
            p.add_argument("--algebra", required=True, help="e.g. A2, C2, B3")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--out", help="write output to this path instead of stdout")

    p = sub.add_parser("chars", help="character table via the eigenvalue recursion")
    common(p)
    p.add_argument("--max", type=int, default=2, dest="max_coord")

    p = sub.add_parser("genfun", help="generating function of characters")
    common(p)
    p.add_argument("--direction", help="comma separated 0/1 indicator for a ray, e.g. 1,1")
    p.add_argument("--timings", action="store_true", help="include wall-clock timings (disables caching)")

    p = sub.add_parser("operator", help="differential operator in z-variables")
    common(p)

    p = sub.add_parser("verify", help="re-check a generating function JSON file")
    common(p, algebra=False)
    p.add_argument("path")

    p = sub.add_parser("dims", help="dimension table and dimension generating function")
    common(p)
    p.add_argument("--order", type=int, default=4)

    p = sub.add_parser("recurrence", help="axis recurrence read off a denominator factor")
    common(p)
    p.add_argument("--axis", type=int, default=1, help="1-based fundamental weight index")
    return parser


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def run(args: argparse.Namespace) -> int:
    cache = None if args.no_cache else ResultCache()

    def cached(alg: Algebra, op: str, params: dict, compute):
        if cache is None:
            return compute()
        return cache.get_or_compute(ResultCache.make_key(alg.name, op, params), compute)

    status = EXIT_OK
    if args.command == "verify":
        try:
            doc = json.loads(Path(args.path).read_text(encoding="utf-8"))
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read {args.path}: {exc}") from exc
        res = genfun_from_json(doc)
        ok = verify_pde(res.algebra, res.gf, res.direction)
        payload = dumps({
            "schema_version": SCHEMA_VERSION,
            "algebra": res.algebra.name,
            "direction": list(res.direction) if res.direction is not None else None,
            "verified": ok,
        })
        status = EXIT_OK if ok else EXIT_UNVERIFIED
    else:
        alg = _algebra(args.algebra)
        if args.command == "chars":
            if args.max_coord < 0:
                raise UsageError("--max must be non-negative")
            payload = cached(alg, "chars", {"max": args.max_coord}, lambda: chars_payload(alg, args.max_coord))
        elif args.command == "genfun":
            direction = _direction(args.direction, alg)
            if args.timings:
                payload = genfun_payload(alg, direction, timings=True)
            else:
                params = {"direction": list(direction) if direction else None}
                payload = cached(alg, "genfun", params, lambda: genfun_payload(alg, direction))
            if not json.loads(payload)["verified"]:
                status = EXIT_UNVERIFIED
        elif args.command == "operator":
            payload = cached(alg, "operator", {}, lambda: operator_payload(alg))
        elif args.command == "dims":
            if args.order < 0:
                raise UsageError("--order must be non-negative")
            payload = cached(alg, "dims", {"order": args.order}, lambda: dims_payload(alg, args.order))
        elif args.command == "recurrence":
            if not 1 <= args.axis <= alg.rank:
                raise UsageError(f"--axis must lie in 1..{alg.rank}")
            payload = cached(alg, "recurrence", {"axis": args.axis}, lambda: recurrence_payload(alg, args.axis))
        else:  # pragma: no cover - argparse rejects unknown commands
            raise UsageError(f"unknown command {args.command}")
    text = payload if args.format == "json" else render_text(args.command, json.loads(payload))
    _emit(text, args.out)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except (UsageError, SchemaError) as exc:
        print(f"liechar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LiecharError as exc:
        print(f"liechar: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Canonical JSON forms for polynomials and pipeline results.

Big integers are written as decimal strings.  Terms are listed in
descending graded-lex order so that equal values always serialize to
identical bytes.
"""
from __future__ import annotations

import json
from typing import Any

from liechar.errors import SchemaError
from liechar.genfun import GenFunResult
from liechar.lie_core import parse_algebra
from liechar.poly import Poly, RationalGF, TPoly, grlex_key

SCHEMA_VERSION = 1


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def poly_to_json(p: Poly) -> list[dict]:
    return [{"exp": list(e), "coeff": str(c)} for e, c in p.sorted_terms()]


def poly_from_json(data: list, nvars: int) -> Poly:
    terms = {}
    for item in data:
        e = tuple(int(x) for x in item["exp"])
        if len(e) != nvars:
            raise SchemaError(f"exponent {list(e)} does not have {nvars} entries")
        terms[e] = int(item["coeff"])
    return Poly(nvars, terms)


def tpoly_to_json(p: TPoly) -> list[dict]:
    return [
        {"exp": list(e), "coeff": poly_to_json(p.terms[e])}
        for e in sorted(p.terms, key=grlex_key, reverse=True)
    ]


def tpoly_from_json(data: list, nt: int, nz: int) -> TPoly:
    terms = {}
    for item in data:
        e = tuple(int(x) for x in item["exp"])
        if len(e) != nt:
            raise SchemaError(f"t-exponent {list(e)} does not have {nt} entries")
        terms[e] = poly_from_json(item["coeff"], nz)
    return TPoly(nt, nz, terms)


def genfun_to_json(res: GenFunResult, timings: bool = False) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "algebra": res.algebra.name,
        "direction": list(res.direction) if res.direction is not None else None,
        "numerator": tpoly_to_json(res.numerator),
        "denominator": tpoly_to_json(res.denominator),
        "dim_P": poly_to_json(res.dim_gf[0]),
        "dim_Q": poly_to_json(res.dim_gf[1]),
        "support": [list(s) for s in res.support],
        "verified": res.verified,
        "timings": {k: v for k, v in sorted(res.timings.items())} if timings else None,
    }


def check_schema(doc: dict) -> None:
    if not isinstance(doc, dict):
        raise SchemaError("expected a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"schema_version {version!r} is not supported (expected {SCHEMA_VERSION})")


def genfun_from_json(doc: dict) -> GenFunResult:
    check_schema(doc)
    try:
        alg = parse_algebra(doc["algebra"])
        direction = tuple(doc["direction"]) if doc.get("direction") is not None else None
        nt = alg.rank if direction is None else 1
        N = tpoly_from_json(doc["numerator"], nt, alg.rank)
        D = tpoly_from_json(doc["denominator"], nt, alg.rank)
        P = poly_from_json(doc["dim_P"], nt)
        Q = poly_from_json(doc["dim_Q"], nt)
        support = [tuple(s) for s in doc["support"]]
        gf = RationalGF(N, D)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed generating function document: {exc}") from exc
    return GenFunResult(alg, direction, gf, (P, Q), support, bool(doc["verified"]), dict(doc.get("timings") or {}))

"""Characters as z-polynomials from the eigenvalue equation alone.

Writing ``chi_m = z^m + sum_mu S[mu] z^(m - mu)``, the coefficient of
``z^nu`` in ``(Delta - eps(m)) chi_m = 0`` gives

    S[nu] = sum_beta R[nu + beta, beta] S[nu + beta] / (eps(m) - eps(nu))

where ``Delta z^nu = eps(nu) z^nu + sum_beta R[nu, beta] z^(nu - beta)``
and the shifts ``beta`` are non-zero non-negative combinations of simple
roots.  Monomials are therefore settled in order of decreasing height.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import heapq
import threading
from typing import Sequence

from liechar.errors import NonDominantWeight, NonIntegerCoefficient, ResonantDenominator
from liechar.lie_core import Algebra, Weight, is_dominant
from liechar.operator import CSOperator, build_operator
from liechar.poly import Poly

_cache: dict[tuple[Algebra, Weight], Poly] = {}
_cache_lock = threading.Lock()


@dataclass(frozen=True)
class CharacterZ:
    weight: Weight
    poly: Poly


def _apply_monomial(op, nu: Weight) -> dict[Weight, int]:
    """``Delta z^nu`` as a dict of z-exponents."""
    out: dict[Weight, int] = {}
    for (j, k), coef in op.second.items():
        if j == k:
            f = nu[j] * (nu[j] - 1)
        else:
            f = nu[j] * nu[k]
        if not f:
            continue
        base = list(nu)
        base[j] -= 1
        base[k] -= 1
        for e, c in coef.terms.items():
            key = tuple(a + b for a, b in zip(base, e))
            out[key] = out.get(key, 0) + f * c
    for j, coef in op.first.items():
        f = nu[j]
        if not f:
            continue
        base = list(nu)
        base[j] -= 1
        for e, c in coef.terms.items():
            key = tuple(a + b for a, b in zip(base, e))
            out[key] = out.get(key, 0) + f * c
    return {e: c for e, c in out.items() if c}


def solve_character(alg: Algebra, csop: CSOperator, m: Weight) -> Poly:
    eps_m = csop.eigenvalue(m)
    op = csop.op
    S: dict[Weight, Fraction] = {}
    resid: dict[Weight, Fraction] = {m: Fraction(0)}
    heap = [(-alg.height(m), m)]
    queued = {m}
    while heap:
        h, nu = heapq.heappop(heap)
        r = resid.pop(nu)
        if nu == m:
            s = Fraction(1)
        elif r == 0:
            continue
        else:
            gap = eps_m - csop.eigenvalue(nu)
            if gap == 0:
                raise ResonantDenominator(f"eps{m} == eps{nu} for {alg.name}")
            s = r / gap
        S[nu] = s
        h_nu = -h
        for e, c in _apply_monomial(op, nu).items():
            if e == nu:
                if c != csop.eigenvalue(nu):
                    raise ArithmeticError(f"operator diagonal at {nu} is {c}, expected eps")
                continue
            if alg.height(e) >= h_nu:
                raise ArithmeticError(f"operator is not triangular: {nu} -> {e}")
            resid[e] = resid.get(e, Fraction(0)) + c * s
            if e not in queued:
                queued.add(e)
                heapq.heappush(heap, (-alg.height(e), e))
    terms = {}
    for nu, s in S.items():
        if s.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient of z^{nu} in chi{m} is {s}")
        if s:
            terms[nu] = int(s)
    return Poly(alg.rank, terms)


def character_z(alg: Algebra, m: Sequence[int], csop: CSOperator | None = None) -> CharacterZ:
    """Character with highest weight ``m`` as a polynomial in the z_k."""
    m = tuple(m)
    if len(m) != alg.rank or not is_dominant(m):
        raise NonDominantWeight(f"weight {m} is not a dominant weight of {alg.name}")
    if csop is not None:
        # a caller-supplied operator bypasses the cache
        return CharacterZ(m, solve_character(alg, csop, m))
    key = (alg, m)
    with _cache_lock:
        hit = _cache.get(key)
    if hit is None:
        hit = solve_character(alg, build_operator(alg), m)
        with _cache_lock:
            _cache.setdefault(key, hit)
    return CharacterZ(m, hit)


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()

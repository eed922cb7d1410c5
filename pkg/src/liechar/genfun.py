"""Generating functions of characters, built ansatz-first and proven by a PDE.

Pipeline for ``G(t; z) = sum_m t^m chi_m(z) = N / D``:

1. ``D`` is the product over fundamental weights of ``prod_{w in W lambda_j}
   (1 - t_j e(w))`` with coefficients rewritten in the z_k.
2. The dimension series ``F = P / Q`` fixes which numerator terms can occur.
3. The numerator coefficients are read off ``D * (truncated series)``.
4. ``(Delta_t - Delta_z) G = 0`` is checked exactly.

Ray generating functions ``sum_s t^s chi_{s c}`` use the single orbit of
``sum_j c_j lambda_j`` for the denominator.
"""
from __future__ import annotations

from dataclasses import dataclass, field
import time
from typing import Sequence

from liechar.errors import DegreeOverflow, InconsistentSystem
from liechar.lie_core import Algebra, dimension, weyl_orbit
from liechar.operator import build_operator, delta_t
from liechar.poly import Poly, RationalGF, TPoly, apply_op_rational, box, grlex_key
from liechar.solver import character_z
from liechar.weyl import rewrite_to_z

# Fallback solves beyond this many unknown numerator coefficients are refused.
MAX_FALLBACK_TERMS = 4096


@dataclass
class GenFunResult:
    algebra: Algebra
    direction: tuple[int, ...] | None
    gf: RationalGF
    dim_gf: tuple[Poly, Poly]
    support: list[tuple[int, ...]]
    verified: bool
    timings: dict = field(default_factory=dict)

    @property
    def numerator(self) -> TPoly:
        return self.gf.numerator

    @property
    def denominator(self) -> TPoly:
        return self.gf.denominator


@dataclass(frozen=True)
class Recurrence:
    """``sum_i coefficients[i] * chi_{(m - i) e_j} = 0`` for every ``m >= onset``."""

    axis: int
    coefficients: tuple[Poly, ...]
    onset: int
    numerator: tuple[Poly, ...]


def orbit_factor(alg: Algebra, w: Sequence[int]) -> list[Poly]:
    """Coefficients of ``prod_{u in W w} (1 - t e(u))`` as z-polynomials.

    Entry ``k`` is ``(-1)^k`` times the k-th elementary symmetric function of
    the orbit monomials.
    """
    r = alg.rank
    coeffs = [Poly.constant(r, 1)]
    for u in sorted(weyl_orbit(alg, w)):
        mono = Poly.monomial(u)
        nxt = coeffs + [Poly.zero(r)]
        for k in range(1, len(nxt)):
            nxt[k] = nxt[k] - coeffs[k - 1] * mono
        coeffs = nxt
    return [rewrite_to_z(alg, c) for c in coeffs]


def denominator_factor(alg: Algebra, j: int) -> TPoly:
    """``D_j`` as a polynomial in ``t_j`` inside the full ``rank``-variable t-space."""
    r = alg.rank
    out = {}
    for k, c in enumerate(orbit_factor(alg, alg.fundamental_weights[j])):
        e = [0] * r
        e[j] = k
        out[tuple(e)] = c
    return TPoly(r, r, out)


def denominator(alg: Algebra) -> TPoly:
    D = TPoly.one(alg.rank, alg.rank)
    for j in range(alg.rank):
        D = D * denominator_factor(alg, j)
    return D


def ray_denominator(alg: Algebra, direction: Sequence[int]) -> TPoly:
    w = tuple(direction)
    return TPoly(1, alg.rank, {(k,): c for k, c in enumerate(orbit_factor(alg, w))})


def _one_minus_t_power(nt: int, j: int, n: int) -> Poly:
    t = Poly.var(nt, j)
    return (Poly.constant(nt, 1) - t) ** n


def _truncate(p: Poly, bounds: Sequence[int]) -> Poly:
    return Poly(p.nvars, {e: c for e, c in p.terms.items() if all(x <= b for x, b in zip(e, bounds))})


def _dim_numerator(nt: int, degs: Sequence[int], dims: dict) -> tuple[Poly, Poly]:
    Q = Poly.constant(nt, 1)
    for j, n in enumerate(degs):
        Q = Q * _one_minus_t_power(nt, j, n)
    F = Poly(nt, dims)
    ext = list(degs)
    prod = _truncate(Q * F, ext)
    P = _truncate(prod, [d - 1 for d in degs])
    leftover = prod - P
    if leftover:
        raise DegreeOverflow(f"dimension numerator does not fit the box {[d - 1 for d in degs]}")
    return P, Q


def dim_genfun(alg: Algebra) -> tuple[Poly, Poly]:
    """``(P, Q)`` with ``sum_m dim(m) t^m = P / Q`` and ``Q = prod (1 - t_j)^|W lambda_j|``.

    ``P`` is read off ``Q * F`` over the box ``l_j <= |W lambda_j| - 1``;
    one extra order per variable must vanish.
    """
    degs = alg.orbit_sizes
    dims = {m: dimension(alg, m) for m in box(degs)}
    return _dim_numerator(alg.rank, degs, dims)


def ray_dim_genfun(alg: Algebra, direction: Sequence[int]) -> tuple[Poly, Poly]:
    n = len(weyl_orbit(alg, direction))
    dims = {(s,): dimension(alg, tuple(s * c for c in direction)) for s in range(n + 1)}
    return _dim_numerator(1, [n], dims)


def _product_coeff(D: TPoly, chars: dict, l: tuple[int, ...]) -> Poly:
    acc = Poly.zero(D.nz)
    for e, c in D.terms.items():
        k = tuple(a - b for a, b in zip(l, e))
        if min(k) >= 0:
            ch = chars[k]
            if ch:
                acc = acc + c * ch
    return acc


def numerator(alg: Algebra, D: TPoly, support: Sequence[Sequence[int]],
              direction: Sequence[int] | None = None) -> TPoly:
    """Numerator coefficients on ``support`` from ``N = D * G``.

    Every other coefficient of ``D * G`` up to ``deg_t(D)`` in each variable
    is checked to vanish; a non-zero one raises :class:`InconsistentSystem`.
    """
    nt = D.nt
    support = [tuple(s) for s in support]
    check = [D.t_degree(j) for j in range(nt)]
    for s in support:
        check = [max(a, b) for a, b in zip(check, s)]
    chars: dict[tuple[int, ...], Poly] = {}
    for l in box(check):
        m = l if direction is None else tuple(l[0] * c for c in direction)
        chars[l] = character_z(alg, m).poly
    out = {}
    for l in sorted(box(check), key=grlex_key):
        c = _product_coeff(D, chars, l)
        if l in support:
            out[l] = c
        elif c:
            raise InconsistentSystem(f"coefficient of t^{l} in D*G is non-zero outside the support")
    return TPoly(nt, D.nz, out)


def pde_operator(alg: Algebra, direction: Sequence[int] | None = None):
    """``Delta_t - Delta_z`` on the joint (t, z) variable space."""
    r = alg.rank
    dz = build_operator(alg).op
    if direction is None:
        dt = delta_t(alg)
        nt = r
    else:
        dt = delta_t(alg, direction, shared=True)
        nt = 1
    return dt.embed(nt + r, 0) - dz.embed(nt + r, nt)


def pde_residual(alg: Algebra, gf: RationalGF, direction: Sequence[int] | None = None) -> TPoly:
    return apply_op_rational(pde_operator(alg, direction), gf)


def verify_pde(alg: Algebra, gf: RationalGF, direction: Sequence[int] | None = None) -> bool:
    """True iff ``(Delta_t - Delta_z)(N / D)`` vanishes identically."""
    return pde_residual(alg, gf, direction).is_zero()


def _solve(alg, D, P, degs, direction, timings):
    support = sorted(P.terms, key=grlex_key)
    try:
        t0 = time.perf_counter()
        N = numerator(alg, D, support, direction)
        timings["numerator"] = time.perf_counter() - t0
        gf = RationalGF(N, D)
        t0 = time.perf_counter()
        ok = verify_pde(alg, gf, direction)
        timings["verify"] = time.perf_counter() - t0
        if ok:
            return gf, support, True
    except InconsistentSystem:
        pass
    full = sorted(box([d - 1 for d in degs]), key=grlex_key)
    if len(full) > MAX_FALLBACK_TERMS:
        raise InconsistentSystem(f"support ansatz failed and the full box has {len(full)} terms")
    timings["fallback"] = True
    t0 = time.perf_counter()
    N = numerator(alg, D, full, direction)
    timings["numerator"] = time.perf_counter() - t0
    gf = RationalGF(N, D)
    t0 = time.perf_counter()
    ok = verify_pde(alg, gf, direction)
    timings["verify"] = time.perf_counter() - t0
    return gf, sorted(N.terms, key=grlex_key), ok


def generating_function(alg: Algebra) -> GenFunResult:
    """Run the four-step pipeline for all characters of ``alg``."""
    timings: dict = {}
    t0 = time.perf_counter()
    D = denominator(alg)
    timings["denominator"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    P, Q = dim_genfun(alg)
    timings["dimensions"] = time.perf_counter() - t0
    gf, support, ok = _solve(alg, D, P, alg.orbit_sizes, None, timings)
    return GenFunResult(alg, None, gf, (P, Q), support, ok, timings)


def _check_direction(alg: Algebra, direction: Sequence[int]) -> tuple[int, ...]:
    c = tuple(int(x) for x in direction)
    if len(c) != alg.rank or any(x not in (0, 1) for x in c) or not any(c):
        raise ValueError(f"direction must be a non-zero 0/1 vector of length {alg.rank}, got {c}")
    return c


def ray_genfun(alg: Algebra, direction: Sequence[int]) -> GenFunResult:
    """Generating function of ``chi_{s c}`` in a single variable ``t``.

    The denominator is the product of ``(1 - t e(w))`` over the orbit of
    ``sum_j c_j lambda_j``.
    """
    c = _check_direction(alg, direction)
    timings: dict = {}
    t0 = time.perf_counter()
    D = ray_denominator(alg, c)
    timings["denominator"] = time.perf_counter() - t0
    t0 = time.perf_counter()
    P, Q = ray_dim_genfun(alg, c)
    timings["dimensions"] = time.perf_counter() - t0
    gf, support, ok = _solve(alg, D, P, [D.t_degree(0)], c, timings)
    return GenFunResult(alg, c, gf, (P, Q), support, ok, timings)


def recurrence_from_denominator(alg: Algebra, j: int) -> Recurrence:
    """Linear recurrence for ``chi_{m lambda_j}`` read off ``D_j``.

    ``j`` is zero-based.  The relation holds for ``m >= onset``, where
    ``onset`` is the first ``m`` at which all indices are non-negative and
    the axis numerator no longer contributes.
    """
    e = tuple(int(i == j) for i in range(alg.rank))
    res = ray_genfun(alg, e)
    if not res.verified:
        raise InconsistentSystem(f"axis generating function along {e} failed verification")
    D, N = res.denominator, res.numerator
    deg_d = D.t_degree(0)
    deg_n = N.t_degree(0)
    coeffs = tuple(D.coeff((k,)) for k in range(deg_d + 1))
    num = tuple(N.coeff((k,)) for k in range(deg_n + 1))
    return Recurrence(j, coeffs, max(deg_d, deg_n + 1), num)

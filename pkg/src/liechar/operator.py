"""The Calogero-Sutherland operator in fundamental-character coordinates.

First-order coefficients come from ``Delta z_j = eps(lambda_j) z_j``.  The
second-order ones come from the tensor square rule

    Delta(z_j z_k) = 2 a_jk + b_j z_k + b_k z_j

where ``Delta(z_j z_k)`` is evaluated by splitting ``z_j z_k`` into
irreducible characters, each of which is an eigenfunction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from liechar.errors import HalfIntegerCoefficient, NonIntegerCoefficient
from liechar.lie_core import Algebra, eigen_coefficients, eigenvalue
from liechar.poly import DiffOp2, Poly
from liechar.weyl import char_x, decompose_characters, rewrite_to_z


@dataclass(frozen=True)
class CSOperator:
    algebra: Algebra
    op: DiffOp2
    quadratic: tuple[tuple[Fraction, ...], ...]
    linear: tuple[Fraction, ...]

    def eigenvalue(self, m: Sequence[int]) -> Fraction:
        r = len(self.linear)
        q = sum(m[i] * self.quadratic[i][j] * m[j] for i in range(r) for j in range(r))
        return q + sum(l * x for l, x in zip(self.linear, m))

    def to_json(self) -> dict:
        from liechar.serialize import poly_to_json
        return {
            "algebra": self.algebra.name,
            "a": [{"j": j + 1, "k": k + 1, "poly": poly_to_json(p)} for (j, k), p in sorted(self.op.second.items())],
            "b": [{"j": j + 1, "poly": poly_to_json(p)} for j, p in sorted(self.op.first.items())],
            "eigen": {
                "quadratic": [[str(x) for x in row] for row in self.quadratic],
                "linear": [str(x) for x in self.linear],
            },
        }


def _z(alg: Algebra, j: int) -> Poly:
    return Poly.var(alg.rank, j)


def build_b(alg: Algebra) -> dict[int, Poly]:
    """``b_j = eps(lambda_j) z_j``."""
    out = {}
    for j, w in enumerate(alg.fundamental_weights):
        out[j] = _z(alg, j).scale_exact(eigenvalue(alg, w))
    return out


def _delta_product(alg: Algebra, j: int, k: int) -> Poly:
    """``Delta(z_j z_k)`` via the Clebsch-Gordan series of ``R_j x R_k``."""
    zj = char_x(alg, alg.fundamental_weights[j]).poly
    zk = char_x(alg, alg.fundamental_weights[k]).poly
    total = Poly.zero(alg.rank)
    for mu, mult in decompose_characters(alg, zj * zk):
        chi = rewrite_to_z(alg, char_x(alg, mu).poly, check=False)
        total = total + chi.scale_exact(eigenvalue(alg, mu) * mult)
    return total


def build_a(alg: Algebra) -> dict[tuple[int, int], Poly]:
    """Second order coefficients keyed by ``(j, k)`` with ``j <= k``.

    Diagonal entries are ``a_jj``; off-diagonal entries hold the full mixed
    coefficient ``a_jk + a_kj = 2 a_jk``.
    """
    b = build_b(alg)
    out = {}
    for j in range(alg.rank):
        for k in range(j, alg.rank):
            two_a = _delta_product(alg, j, k) - b[j] * _z(alg, k) - b[k] * _z(alg, j)
            if j == k:
                try:
                    two_a = two_a.scale_exact(Fraction(1, 2))
                except NonIntegerCoefficient as exc:
                    raise HalfIntegerCoefficient(f"a_{j + 1}{k + 1} is not integral") from exc
            if two_a:
                out[(j, k)] = two_a
    return out


@lru_cache(maxsize=None)
def build_operator(alg: Algebra) -> CSOperator:
    Q, L = eigen_coefficients(alg)
    op = DiffOp2(alg.rank, build_a(alg), build_b(alg), "z")
    return CSOperator(alg, op, Q, L)


def delta_t(alg: Algebra, direction: Sequence[int] | None = None, *, shared: bool = False) -> DiffOp2:
    """The eigenvalue with ``m_j`` replaced by the Euler operator ``t_j d/dt_j``.

    ``direction`` is a 0/1 indicator (all ones by default).  With
    ``shared=False`` the result acts on ``rank`` t-variables and inactive
    directions are dropped; with ``shared=True`` a single ``t`` runs along
    the ray ``m = s * direction``.
    """
    r = alg.rank
    c = tuple(direction) if direction is not None else (1,) * r
    if len(c) != r or any(x not in (0, 1) for x in c) or not any(c):
        raise ValueError(f"direction must be a non-zero 0/1 vector of length {r}, got {c}")
    Q, L = eigen_coefficients(alg)

    def integral(x: Fraction) -> int:
        if Fraction(x).denominator != 1:
            raise NonIntegerCoefficient(f"operator coefficient {x} is not an integer")
        return int(x)

    if shared:
        quad = sum(c[i] * Q[i][j] * c[j] for i in range(r) for j in range(r))
        lin = sum(L[i] * c[i] for i in range(r))
        t = Poly.var(1, 0)
        second = {(0, 0): (t * t) * integral(quad)} if quad else {}
        first = {0: t * integral(quad + lin)} if quad + lin else {}
        return DiffOp2(1, second, first, "t")

    second: dict[tuple[int, int], Poly] = {}
    first: dict[int, Poly] = {}
    for j in range(r):
        if not c[j]:
            continue
        tj = Poly.var(r, j)
        if Q[j][j]:
            second[(j, j)] = (tj * tj) * integral(Q[j][j])
        lin = Q[j][j] + L[j]
        if lin:
            first[j] = tj * integral(lin)
        for k in range(j + 1, r):
            if c[k] and Q[j][k]:
                second[(j, k)] = (tj * Poly.var(r, k)) * integral(2 * Q[j][k])
    return DiffOp2(r, second, first, "t")

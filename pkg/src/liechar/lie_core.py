"""Root data, Weyl group action, eigenvalues and dimensions for A, B, C, D.

Weights are integer tuples in the basis of fundamental weights.  A simple
root ``alpha_i`` is row ``i`` of the Cartan matrix in that basis, and the
simple reflection is ``s_i(v) = v - v[i] * alpha_i``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd, lcm
import re
from typing import Sequence

from liechar.errors import NonDominantWeight, UnsupportedAlgebra

Weight = tuple[int, ...]
Matrix = tuple[tuple[Fraction, ...], ...]

FAMILIES = ("A", "B", "C", "D")


def cartan_matrix(family: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix ``A[i][j] = <alpha_i, alpha_j^vee>`` in Bourbaki numbering."""
    r = rank
    A = [[0] * r for _ in range(r)]
    for i in range(r):
        A[i][i] = 2
    if family == "D":
        for i in range(r - 2):
            A[i][i + 1] = A[i + 1][i] = -1
        A[r - 3][r - 1] = A[r - 1][r - 3] = -1
    else:
        for i in range(r - 1):
            A[i][i + 1] = A[i + 1][i] = -1
        if r >= 2 and family == "B":
            A[r - 2][r - 1] = -2
        elif r >= 2 and family == "C":
            A[r - 1][r - 2] = -2
    return tuple(tuple(row) for row in A)


def _half_root_lengths(family: str, rank: int) -> list[int]:
    # <alpha_i, alpha_i> / 2 with short roots of squared length 2
    d = [1] * rank
    if family == "B" and rank >= 2:
        d = [2] * (rank - 1) + [1]
    elif family == "C":
        d = [1] * (rank - 1) + [2]
    return d


def mat_inverse(M: Sequence[Sequence]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n = len(M)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def integral_scale(G: Sequence[Sequence[Fraction]]) -> Fraction:
    """Smallest c > 0 such that ``c * <w, w>`` is integer-valued on weights.

    Equivalently ``c * G[i][i]`` and ``2 c * G[i][j]`` are all integers.
    This reproduces the customary normalizations (A1: 2, A2: 3/2, C2: 1)
    and keeps every operator coefficient integral.
    """
    vals = []
    n = len(G)
    for i in range(n):
        vals.append(Fraction(G[i][i]))
        for j in range(i + 1, n):
            vals.append(2 * Fraction(G[i][j]))
    vals = [v for v in vals if v]
    L = lcm(*(v.denominator for v in vals))
    g = 0
    for v in vals:
        g = gcd(g, v.numerator * (L // v.denominator))
    return Fraction(L, g)


@dataclass(frozen=True)
class Algebra:
    """Root-system data of a classical simple Lie algebra.

    ``form`` is the Gram matrix of the fundamental weights; it already
    includes ``scale`` relative to the convention where short roots have
    squared length 2.
    """

    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    form: Matrix
    scale: Fraction

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self.cartan

    @property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return tuple(tuple(row) for row in mat_inverse(self.cartan))

    @cached_property
    def positive_roots(self) -> tuple[Weight, ...]:
        roots = set()
        for a in self.simple_roots:
            roots |= weyl_orbit(self, a)
        pos = [r for r in roots if all(c >= 0 for c in self.root_coords(r))]
        return tuple(sorted(pos, key=lambda r: (self.height(r), r)))

    @cached_property
    def fundamental_weights(self) -> tuple[Weight, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank))

    @cached_property
    def orbit_sizes(self) -> tuple[int, ...]:
        return tuple(len(weyl_orbit(self, w)) for w in self.fundamental_weights)

    @cached_property
    def _heights(self) -> tuple[Fraction, ...]:
        return tuple(sum(row) for row in self.cartan_inverse)

    def root_coords(self, w: Sequence[int]) -> tuple[Fraction, ...]:
        """Coefficients of ``w`` in the basis of simple roots."""
        Ainv = self.cartan_inverse
        return tuple(sum(w[k] * Ainv[k][i] for k in range(self.rank)) for i in range(self.rank))

    def height(self, w: Sequence[int]) -> Fraction:
        return sum((n * h for n, h in zip(w, self._heights)), Fraction(0))

    def inner(self, u: Sequence[int], v: Sequence[int]) -> Fraction:
        G = self.form
        return sum((u[i] * G[i][j] * v[j] for i in range(self.rank) for j in range(self.rank) if u[i] and v[j]),
                   Fraction(0))

    def reflect(self, i: int, v: Sequence[int]) -> Weight:
        k = v[i]
        if not k:
            return tuple(v)
        a = self.cartan[i]
        return tuple(x - k * y for x, y in zip(v, a))

    def with_scale(self, scale: Fraction | int) -> "Algebra":
        return build_algebra(self.family, self.rank, scale=Fraction(scale))

    def to_json(self) -> dict:
        return {
            "family": self.family,
            "rank": self.rank,
            "cartan": [list(r) for r in self.cartan],
            "form": [[str(x) for x in r] for r in self.form],
            "scale": str(self.scale),
            "simple_roots": [list(r) for r in self.simple_roots],
            "positive_roots": [list(r) for r in self.positive_roots],
            "rho": list(self.rho),
            "orbit_sizes": list(self.orbit_sizes),
        }


@lru_cache(maxsize=None)
def build_algebra(family: str, rank: int, scale: Fraction | None = None) -> Algebra:
    """Build root data for ``family`` in {A, B, C, D} and ``rank >= 1``.

    With ``scale=None`` the form is normalized by :func:`integral_scale`.
    """
    family = family.upper()
    if family not in FAMILIES:
        raise UnsupportedAlgebra(f"unsupported family {family!r}; expected one of {', '.join(FAMILIES)}")
    if not isinstance(rank, int) or rank < 1:
        raise UnsupportedAlgebra(f"rank must be a positive integer, got {rank!r}")
    if family == "D" and rank < 3:
        raise UnsupportedAlgebra("D needs rank >= 3 (D2 is not simple)")
    A = cartan_matrix(family, rank)
    d = _half_root_lengths(family, rank)
    Ainv = mat_inverse(A)
    # <lambda_i, lambda_j> = d_i * (A^{-1})_{ji}
    G0 = [[d[i] * Ainv[j][i] for j in range(rank)] for i in range(rank)]
    c = integral_scale(G0) if scale is None else Fraction(scale)
    if c <= 0:
        raise ValueError("scale must be positive")
    form = tuple(tuple(c * x for x in row) for row in G0)
    return Algebra(family, rank, A, form, c)


_NAME = re.compile(r"^\s*([A-Da-d])\s*(\d+)\s*$")


def parse_algebra(name: str) -> Algebra:
    """Parse strings such as ``"C2"`` or ``"a3"``."""
    m = _NAME.match(name)
    if not m:
        raise UnsupportedAlgebra(f"cannot parse algebra name {name!r}")
    return build_algebra(m.group(1).upper(), int(m.group(2)))


def weyl_orbit(alg: Algebra, w: Sequence[int]) -> frozenset[Weight]:
    """Orbit of ``w`` under the Weyl group, by closure under simple reflections."""
    start = tuple(w)
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for i in range(alg.rank):
            u = alg.reflect(i, v)
            if u not in seen:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def is_dominant(w: Sequence[int]) -> bool:
    return all(c >= 0 for c in w)


def eigenvalue(alg: Algebra, m: Sequence[int]) -> Fraction:
    """``<lambda, lambda + 2 rho>`` for ``lambda = sum m_j lambda_j``."""
    lam = tuple(m)
    two_rho_plus = tuple(x + 2 for x in lam)
    return alg.inner(lam, two_rho_plus)


def eigen_coefficients(alg: Algebra) -> tuple[Matrix, tuple[Fraction, ...]]:
    """``(Q, L)`` with eigenvalue(m) = m^T Q m + L . m."""
    G = alg.form
    L = tuple(2 * sum(G[i]) for i in range(alg.rank))
    return G, L


def dimension(alg: Algebra, m: Sequence[int]) -> int:
    """Weyl dimension formula."""
    if not is_dominant(m):
        raise NonDominantWeight(f"weight {tuple(m)} is not dominant")
    lam_rho = tuple(x + 1 for x in m)
    num = Fraction(1)
    for a in alg.positive_roots:
        num *= alg.inner(lam_rho, a) / alg.inner(alg.rho, a)
    if num.denominator != 1:
        raise ArithmeticError(f"non-integral dimension {num}")
    return int(num)

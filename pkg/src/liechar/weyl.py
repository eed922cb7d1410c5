"""Characters from the Weyl character formula, and the x -> z rewrite.

This module is the ground truth the z-space solver is checked against.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
import threading
from typing import Sequence

from liechar.errors import NegativeMultiplicity, NonDominantWeight, NonTermination, NotWeylInvariant
from liechar.lie_core import Algebra, Weight, is_dominant
from liechar.poly import Poly, laurent_exact_div

_lock = threading.RLock()


@dataclass(frozen=True)
class CharacterX:
    weight: Weight
    poly: Poly


def alternating_sum(alg: Algebra, w: Sequence[int]) -> Poly:
    """``sum_{g in W} sign(g) e(g w)`` for a regular weight ``w``.

    The orbit of a regular weight is free, so the parity of any reflection
    word reaching an orbit point is that point's sign.
    """
    start = tuple(w)
    signs = {start: 1}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        s = signs[v]
        for i in range(alg.rank):
            u = alg.reflect(i, v)
            if u == v:
                raise ValueError(f"weight {start} is not regular")
            if u not in signs:
                signs[u] = -s
                queue.append(u)
    return Poly(alg.rank, signs)


@lru_cache(maxsize=None)
def _weyl_denominator(alg: Algebra) -> Poly:
    return alternating_sum(alg, alg.rho)


@lru_cache(maxsize=4096)
def _char_x(alg: Algebra, m: Weight) -> Poly:
    shifted = tuple(x + 1 for x in m)
    return laurent_exact_div(alternating_sum(alg, shifted), _weyl_denominator(alg))


def char_x(alg: Algebra, m: Sequence[int]) -> CharacterX:
    """Character of the irreducible representation with highest weight ``m``."""
    m = tuple(m)
    if len(m) != alg.rank or not is_dominant(m):
        raise NonDominantWeight(f"weight {m} is not a dominant weight of {alg.name}")
    with _lock:
        poly = _char_x(alg, m)
    return CharacterX(m, poly)


def fundamental_x(alg: Algebra) -> list[Poly]:
    """The fundamental characters ``z_k`` as Laurent polynomials in x."""
    return [char_x(alg, w).poly for w in alg.fundamental_weights]


def is_weyl_invariant(alg: Algebra, p: Poly) -> bool:
    for i in range(alg.rank):
        for e, c in p.terms.items():
            if p.terms.get(alg.reflect(i, e)) != c:
                return False
    return True


@lru_cache(maxsize=4096)
def _z_monomial_x(alg: Algebra, n: Weight) -> Poly:
    if not any(n):
        return Poly.constant(alg.rank, 1)
    j = max(i for i, k in enumerate(n) if k)
    rest = list(n)
    rest[j] -= 1
    return _z_monomial_x(alg, tuple(rest)) * fundamental_x(alg)[j]


def z_monomial_x(alg: Algebra, n: Sequence[int]) -> Poly:
    """``prod_k z_k(x)**n_k`` as a Laurent polynomial."""
    with _lock:
        return _z_monomial_x(alg, tuple(n))


def _top_dominant(alg: Algebra, p: Poly) -> Weight:
    cands = [e for e in p.terms if is_dominant(e)]
    if not cands:
        raise NotWeylInvariant("no dominant exponent in a nonzero polynomial")
    return max(cands, key=lambda e: (alg.height(e), e))


def rewrite_to_z(alg: Algebra, p: Poly, *, check: bool = True, max_steps: int = 1_000_000) -> Poly:
    """Express a Weyl-invariant Laurent polynomial as a polynomial in the z_k.

    The dominant exponent of maximal height is peeled off repeatedly; each
    subtraction of ``c * z^n`` only introduces dominant exponents of strictly
    smaller height, so the loop terminates on invariant input.
    """
    if check and not is_weyl_invariant(alg, p):
        raise NotWeylInvariant("polynomial is not invariant under the Weyl group")
    rem = p
    out: dict[Weight, int] = {}
    steps = 0
    while rem:
        steps += 1
        if steps > max_steps:
            raise NonTermination("rewrite did not terminate; input is not Weyl invariant")
        n = _top_dominant(alg, rem)
        c = rem.terms[n]
        out[n] = c
        rem = rem - z_monomial_x(alg, n) * c
    return Poly(alg.rank, out)


def z_to_x(alg: Algebra, q: Poly) -> Poly:
    """Substitute ``z_k -> z_k(x)``; inverse of :func:`rewrite_to_z`."""
    out = Poly.zero(alg.rank)
    for n, c in q.terms.items():
        out = out + z_monomial_x(alg, n) * c
    return out


def decompose_characters(alg: Algebra, p: Poly) -> list[tuple[Weight, int]]:
    """Split a Weyl-invariant Laurent polynomial into irreducible characters.

    Returns ``(highest weight, multiplicity)`` pairs sorted by decreasing
    height.  Raises :class:`NegativeMultiplicity` when ``p`` is not a
    genuine (non-negative) sum of characters.
    """
    if not is_weyl_invariant(alg, p):
        raise NotWeylInvariant("polynomial is not invariant under the Weyl group")
    rem = p
    out: list[tuple[Weight, int]] = []
    while rem:
        n = _top_dominant(alg, rem)
        c = rem.terms[n]
        if c < 0:
            raise NegativeMultiplicity(f"weight {n} would need multiplicity {c}")
        out.append((n, c))
        rem = rem - char_x(alg, n).poly * c
    return out

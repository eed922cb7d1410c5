"""Exact sparse multivariate polynomials over the integers.

A single :class:`Poly` type covers both Laurent polynomials in the torus
variables ``x`` (negative exponents allowed) and ordinary polynomials in the
fundamental characters ``z``.  Polynomials in auxiliary ``t`` variables whose
coefficients are ``z``-polynomials are held by :class:`TPoly`, and
:class:`DiffOp2` is a second order differential operator with polynomial
coefficients.

Terms live in a dict keyed by exponent tuples.  A canonical order (graded
lexicographic) is only imposed when printing, serializing or extracting a
leading term.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct
from typing import Iterable, Mapping, Sequence

from liechar.errors import NonExactDivision, NonIntegerCoefficient

Exp = tuple[int, ...]


def grlex_key(exp: Exp) -> tuple:
    return (sum(exp), exp)


def _add_exp(a: Exp, b: Exp) -> Exp:
    return tuple(x + y for x, y in zip(a, b))


def _sub_exp(a: Exp, b: Exp) -> Exp:
    return tuple(x - y for x, y in zip(a, b))


class Poly:
    """Sparse polynomial with arbitrary-precision integer coefficients.

    Parameters
    ----------
    nvars : int
        Number of variables.
    terms : mapping, optional
        Exponent tuple -> integer coefficient.  Zero coefficients are dropped.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Exp, int] | None = None):
        self.nvars = nvars
        clean: dict[Exp, int] = {}
        if terms:
            for e, c in terms.items():
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} does not have {nvars} entries")
                    if not isinstance(c, int):
                        c = _as_int(c)
                    clean[e] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exp, int]) -> "Poly":
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Sequence[int], c: int = 1) -> "Poly":
        exp = tuple(exp)
        return cls(len(exp), {exp: c})

    @classmethod
    def var(cls, nvars: int, i: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): 1})

    # ---- basic protocol -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Poly.constant(self.nvars, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        return f"Poly({self.nvars}, {self.to_str()!r})"

    def coeff(self, exp: Sequence[int]) -> int:
        return self.terms.get(tuple(exp), 0)

    def sorted_terms(self, reverse: bool = True) -> list[tuple[Exp, int]]:
        return sorted(self.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=reverse)

    def leading_exp(self) -> Exp:
        return max(self.terms, key=grlex_key)

    def trailing_exp(self) -> Exp:
        return min(self.terms, key=grlex_key)

    def is_polynomial(self) -> bool:
        return all(min(e, default=0) >= 0 for e in self.terms)

    def degree(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=0)

    def min_degree(self, i: int) -> int:
        return min((e[i] for e in self.terms), default=0)

    # ---- ring operations ------------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def _coerce(self, other) -> "Poly":
        if isinstance(other, int):
            return Poly.constant(self.nvars, other)
        if isinstance(other, Poly):
            self._check(other)
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return Poly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return Poly.zero(self.nvars)
            return Poly._raw(self.nvars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        out: dict[Exp, int] = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return Poly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_exact(self, c: Fraction | int) -> "Poly":
        """Multiply by a rational, requiring every coefficient to stay integral."""
        c = Fraction(c)
        out = {}
        for e, v in self.terms.items():
            w = v * c
            if w.denominator != 1:
                raise NonIntegerCoefficient(f"coefficient {w} at {e} is not an integer")
            if w:
                out[e] = int(w)
        return Poly._raw(self.nvars, out)

    def shift(self, exp: Sequence[int]) -> "Poly":
        return Poly._raw(self.nvars, {_add_exp(e, exp): c for e, c in self.terms.items()})

    # ---- calculus and substitution -------------------------------------

    def diff(self, i: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            k = e[i]
            if k:
                ne = list(e)
                ne[i] = k - 1
                out[tuple(ne)] = c * k
        return Poly._raw(self.nvars, out)

    def evaluate(self, values: Sequence) -> Fraction | int:
        total = 0
        for e, c in self.terms.items():
            term = c
            for v, k in zip(values, e):
                if k:
                    term = term * (Fraction(v) ** k if k < 0 else v ** k)
            total += term
        return total

    def compose(self, subs: Sequence["Poly"]) -> "Poly":
        """Substitute variable ``i`` by ``subs[i]`` (non-negative exponents only)."""
        if len(subs) != self.nvars:
            raise ValueError("need one substitution per variable")
        n = subs[0].nvars if subs else 0
        cache: dict[tuple[int, int], Poly] = {}

        def power(i: int, k: int) -> Poly:
            if (i, k) not in cache:
                cache[(i, k)] = subs[i] ** k
            return cache[(i, k)]

        out = Poly.zero(n)
        for e, c in self.terms.items():
            if min(e, default=0) < 0:
                raise ValueError("compose needs non-negative exponents")
            term = Poly.constant(n, c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            out = out + term
        return out

    def embed(self, nvars: int, offset: int) -> "Poly":
        """View this polynomial inside a larger variable space."""
        pad_l = (0,) * offset
        pad_r = (0,) * (nvars - offset - self.nvars)
        return Poly._raw(nvars, {pad_l + e + pad_r: c for e, c in self.terms.items()})

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            factors = []
            for name, k in zip(names, e):
                if k == 1:
                    factors.append(name)
                elif k:
                    factors.append(f"{name}^{k}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        s = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s


def _as_int(c) -> int:
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise NonIntegerCoefficient(f"coefficient {c} is not an integer")
        return int(c)
    if isinstance(c, int):
        return c
    raise TypeError(f"unsupported coefficient type {type(c).__name__}")


# Aliases: same representation, different variable conventions.
LaurentPoly = Poly
ZPoly = Poly


def laurent_mul(p: Poly, q: Poly) -> Poly:
    return p * q


zpoly_mul = laurent_mul


def laurent_exact_div(p: Poly, q: Poly) -> Poly:
    """Exact quotient ``p / q`` in the Laurent polynomial ring.

    Leading terms are eliminated under graded-lex order, which is compatible
    with multiplication on the whole exponent lattice.  Candidate quotient
    terms are confined to the per-variable degree window forced by
    ``deg_i(p) = deg_i(q) + deg_i(p/q)``, so the loop always terminates.

    Raises
    ------
    ZeroDivisionError
        If ``q`` is zero.
    NonExactDivision
        If ``q`` does not divide ``p``.
    """
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    p._check(q)
    n = p.nvars
    if p.is_zero():
        return Poly.zero(n)
    lo = [p.min_degree(i) - q.min_degree(i) for i in range(n)]
    hi = [p.degree(i) - q.degree(i) for i in range(n)]
    lq = q.leading_exp()
    cq = q.terms[lq]
    rem = dict(p.terms)
    quot: dict[Exp, int] = {}
    qterms = list(q.terms.items())
    while rem:
        lr = max(rem, key=grlex_key)
        e = _sub_exp(lr, lq)
        if any(x < a or x > b for x, a, b in zip(e, lo, hi)):
            raise NonExactDivision("divisor does not divide dividend")
        c, r = divmod(rem[lr], cq)
        if r:
            raise NonExactDivision("non-integral quotient coefficient")
        quot[e] = c
        for eq, v in qterms:
            k = _add_exp(eq, e)
            w = rem.get(k, 0) - c * v
            if w:
                rem[k] = w
            else:
                rem.pop(k, None)
    result = Poly._raw(n, quot)
    if result * q != p:
        raise NonExactDivision("multiply-back check failed")
    return result


# ---------------------------------------------------------------------------
#  Polynomials in t with z-polynomial coefficients
# ---------------------------------------------------------------------------


class TPoly:
    """Polynomial in ``nt`` auxiliary variables with ``ZPoly`` coefficients."""

    __slots__ = ("nt", "nz", "terms")

    def __init__(self, nt: int, nz: int, terms: Mapping[Exp, Poly] | None = None):
        self.nt = nt
        self.nz = nz
        self.terms: dict[Exp, Poly] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != nt or c.nvars != nz:
                raise ValueError("shape mismatch in TPoly term")
            if min(e, default=0) < 0:
                raise ValueError("t-exponents must be non-negative")
            if c:
                self.terms[e] = c

    @classmethod
    def one(cls, nt: int, nz: int) -> "TPoly":
        return cls(nt, nz, {(0,) * nt: Poly.constant(nz, 1)})

    @classmethod
    def from_flat(cls, p: Poly, nt: int) -> "TPoly":
        nz = p.nvars - nt
        grouped: dict[Exp, dict[Exp, int]] = {}
        for e, c in p.terms.items():
            grouped.setdefault(e[:nt], {})[e[nt:]] = c
        return cls(nt, nz, {te: Poly(nz, zt) for te, zt in grouped.items()})

    def flatten(self) -> Poly:
        out = {}
        for te, zp in self.terms.items():
            for ze, c in zp.terms.items():
                out[te + ze] = c
        return Poly._raw(self.nt + self.nz, out)

    def coeff(self, exp: Sequence[int]) -> Poly:
        return self.terms.get(tuple(exp), Poly.zero(self.nz))

    def t_degree(self, j: int) -> int:
        return max((e[j] for e in self.terms), default=0)

    def support(self) -> list[Exp]:
        return sorted(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, TPoly):
            return NotImplemented
        return (self.nt, self.nz) == (other.nt, other.nz) and self.terms == other.terms

    def __repr__(self) -> str:
        return f"TPoly({self.to_str()!r})"

    def __add__(self, other: "TPoly") -> "TPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out[e] + c if e in out else c
        return TPoly(self.nt, self.nz, out)

    def __neg__(self) -> "TPoly":
        return TPoly(self.nt, self.nz, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TPoly") -> "TPoly":
        return self + (-other)

    def __mul__(self, other: "TPoly") -> "TPoly":
        if (self.nt, self.nz) != (other.nt, other.nz):
            raise ValueError("shape mismatch")
        out: dict[Exp, Poly] = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _add_exp(ea, eb)
                prod = ca * cb
                out[e] = out[e] + prod if e in out else prod
        return TPoly(self.nt, self.nz, out)

    def substitute_z(self, values: Sequence[int]) -> Poly:
        """Specialize every z-coefficient at integer values."""
        out = {}
        for e, zp in self.terms.items():
            v = _as_int(zp.evaluate(values))
            if v:
                out[e] = v
        return Poly._raw(self.nt, out)

    def restrict(self, keep: Sequence[int]) -> "TPoly":
        """Set every t-variable not listed in ``keep`` to zero and drop it."""
        keep = list(keep)
        out = {}
        for e, zp in self.terms.items():
            if all(e[j] == 0 for j in range(self.nt) if j not in keep):
                out[tuple(e[j] for j in keep)] = zp
        return TPoly(len(keep), self.nz, out)

    def to_str(self, tnames: Sequence[str] | None = None, znames: Sequence[str] | None = None) -> str:
        if tnames is None:
            tnames = ["t"] if self.nt == 1 else [f"t{i + 1}" for i in range(self.nt)]
        if znames is None:
            znames = [f"z{i + 1}" for i in range(self.nz)]
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=grlex_key):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(tnames, e) if k)
            c = self.terms[e]
            cs = c.to_str(znames)
            if not mono:
                parts.append(cs if len(c) == 1 else f"({cs})")
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            elif len(c) == 1:
                parts.append(f"{cs}*{mono}")
            else:
                parts.append(f"({cs})*{mono}")
        s = parts[0]
        for part in parts[1:]:
            s += f" - {part[1:]}" if part.startswith("-") else f" + {part}"
        return s


def tpoly_mul(p: TPoly, q: TPoly) -> TPoly:
    return p * q


@dataclass(frozen=True)
class RationalGF:
    """A generating function ``numerator / denominator``; denominator(0) == 1."""

    numerator: TPoly
    denominator: TPoly

    def __post_init__(self):
        d0 = self.denominator.coeff((0,) * self.denominator.nt)
        if d0 != Poly.constant(self.denominator.nz, 1):
            raise ValueError("denominator constant term must be 1")


def box(bounds: Sequence[int]) -> Iterable[Exp]:
    """All exponent vectors ``e`` with ``0 <= e[j] <= bounds[j]``."""
    return iproduct(*(range(b + 1) for b in bounds))


def series_coefficients(g: RationalGF, order: Sequence[int]) -> dict[Exp, Poly]:
    """Taylor coefficients of ``N / D`` in the box ``0 <= l[j] <= order[j]``.

    Uses ``N = D * G`` read off coefficientwise; since ``D(0) = 1`` each
    coefficient ``G_l`` is ``N_l`` minus already known convolution terms.
    """
    N, D = g.numerator, g.denominator
    nz = N.nz
    zero = Poly.zero(nz)
    dterms = [(e, c) for e, c in D.terms.items() if any(e)]
    out: dict[Exp, Poly] = {}
    for l in sorted(box(order), key=grlex_key):
        acc = N.terms.get(l, zero)
        for e, c in dterms:
            if all(a <= b for a, b in zip(e, l)):
                prev = out[_sub_exp(l, e)]
                if prev:
                    acc = acc - c * prev
        out[l] = acc
    return out


# ---------------------------------------------------------------------------
#  Second order differential operators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DiffOp2:
    """``sum_{j<=k} second[j,k] d_j d_k + sum_j first[j] d_j``.

    For ``j < k`` the stored polynomial is the full coefficient of the mixed
    derivative, i.e. the sum of the symmetric pair ``a_jk + a_kj``.
    """

    nvars: int
    second: dict = field(default_factory=dict)
    first: dict = field(default_factory=dict)
    space: str = "z"

    def __post_init__(self):
        for (j, k), p in self.second.items():
            if j > k:
                raise ValueError("second-order keys must satisfy j <= k")
            if p.nvars != self.nvars:
                raise ValueError("coefficient variable count mismatch")
        for p in self.first.values():
            if p.nvars != self.nvars:
                raise ValueError("coefficient variable count mismatch")

    def a(self, j: int, k: int) -> Poly:
        """Symmetric coefficient a_jk (cross terms halved; may raise if odd)."""
        if j == k:
            return self.second.get((j, j), Poly.zero(self.nvars))
        c = self.second.get((min(j, k), max(j, k)), Poly.zero(self.nvars))
        return c.scale_exact(Fraction(1, 2))

    def b(self, j: int) -> Poly:
        return self.first.get(j, Poly.zero(self.nvars))

    def apply(self, p: Poly) -> Poly:
        out = Poly.zero(self.nvars)
        for (j, k), c in self.second.items():
            d = p.diff(j).diff(k)
            if d:
                out = out + c * d
        for j, c in self.first.items():
            d = p.diff(j)
            if d:
                out = out + c * d
        return out

    def embed(self, nvars: int, offset: int, space: str | None = None) -> "DiffOp2":
        return DiffOp2(
            nvars,
            {(j + offset, k + offset): c.embed(nvars, offset) for (j, k), c in self.second.items()},
            {j + offset: c.embed(nvars, offset) for j, c in self.first.items()},
            space or self.space,
        )

    def _combine(self, other: "DiffOp2", sign: int) -> "DiffOp2":
        if self.nvars != other.nvars:
            raise ValueError("operators act on different variable spaces")
        second = dict(self.second)
        for key, c in other.second.items():
            second[key] = second.get(key, Poly.zero(self.nvars)) + c * sign
        first = dict(self.first)
        for key, c in other.first.items():
            first[key] = first.get(key, Poly.zero(self.nvars)) + c * sign
        return DiffOp2(
            self.nvars,
            {k: v for k, v in second.items() if v},
            {k: v for k, v in first.items() if v},
            self.space if self.space == other.space else f"{self.space}{other.space}",
        )

    def __add__(self, other: "DiffOp2") -> "DiffOp2":
        return self._combine(other, 1)

    def __sub__(self, other: "DiffOp2") -> "DiffOp2":
        return self._combine(other, -1)

    def scale(self, c: int) -> "DiffOp2":
        return DiffOp2(
            self.nvars,
            {k: v * c for k, v in self.second.items()},
            {k: v * c for k, v in self.first.items()},
            self.space,
        )

    def is_zero(self) -> bool:
        return not any(self.second.values()) and not any(self.first.values())

    def to_str(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = [f"x{i + 1}" for i in range(self.nvars)]
        parts = []
        for (j, k) in sorted(self.second):
            d = f"d{names[j]}^2" if j == k else f"d{names[j]}*d{names[k]}"
            parts.append(f"({self.second[(j, k)].to_str(names)})*{d}")
        for j in sorted(self.first):
            parts.append(f"({self.first[j].to_str(names)})*d{names[j]}")
        return " + ".join(parts) if parts else "0"


def apply_op_poly(op: DiffOp2, p: Poly) -> Poly:
    return op.apply(p)


def apply_op_rational_flat(op: DiffOp2, N: Poly, D: Poly) -> Poly:
    """Numerator of ``op(N / D)`` over the common denominator ``D**3``.

    Quotient rule, grouped as ``D^2 A - D B + 2 N C`` with
    ``A = op(N)``, ``B = sum c_jk (N_j D_k + N_k D_j + N D_jk) + sum b_j N D_j``
    and ``C = sum c_jk D_j D_k``.
    """
    n = op.nvars
    Nd = {i: N.diff(i) for i in range(n)}
    Dd = {i: D.diff(i) for i in range(n)}
    A = op.apply(N)
    B = Poly.zero(n)
    C = Poly.zero(n)
    for (j, k), c in op.second.items():
        inner = Nd[j] * Dd[k] + Nd[k] * Dd[j] + N * Dd[j].diff(k)
        if inner:
            B = B + c * inner
        dd = Dd[j] * Dd[k]
        if dd:
            C = C + c * dd
    for j, c in op.first.items():
        if Dd[j]:
            B = B + c * (N * Dd[j])
    return (D * D) * A - D * B + (N * C) * 2


def apply_op_rational(op: DiffOp2, g: RationalGF) -> TPoly:
    """Apply ``op`` (acting on the joint (t, z) space) to ``g``; see the flat variant."""
    nt = g.numerator.nt
    flat = apply_op_rational_flat(op, g.numerator.flatten(), g.denominator.flatten())
    return TPoly.from_flat(flat, nt)

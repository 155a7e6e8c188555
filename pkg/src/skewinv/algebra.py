"""
Graded algebras on n generators with three sign rules.

* ``exterior``: x_i x_j = -x_j x_i for all i, j, so x_i^2 = 0.
* ``skew_minus_one``: x_i x_j = -x_j x_i for i != j, squares survive.
* ``symmetric``: the commutative polynomial ring.

A monomial is an exponent tuple, read as the ordered word
x_1^a_1 x_2^a_2 ... x_n^a_n.  The last two rules are infinite-dimensional,
so their contexts carry a degree cap and every product is truncated above
it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Mapping, Sequence

from .errors import ContextMismatchError, DegreeError, UnsupportedSubstitutionError
from .linalg import Vector, as_fraction

EXTERIOR = "exterior"
SKEW = "skew_minus_one"
SYMMETRIC = "symmetric"
RULES = (EXTERIOR, SKEW, SYMMETRIC)

Monomial = tuple[int, ...]


@dataclass(frozen=True)
class AlgebraCtx:
    n: int
    rule: str = EXTERIOR
    cap: int | None = None
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one variable")
        if self.rule not in RULES:
            raise ValueError("unknown sign rule %r" % (self.rule,))
        if self.rule == EXTERIOR:
            object.__setattr__(self, "cap", self.n)
        elif self.cap is None or self.cap < 1:
            raise ValueError("rule %s needs a finite cap >= 1" % self.rule)
        if not self.names:
            object.__setattr__(self, "names", tuple("x%d" % (i + 1) for i in range(self.n)))
        else:
            object.__setattr__(self, "names", tuple(self.names))
        if len(self.names) != self.n or len(set(self.names)) != self.n:
            raise ValueError("need %d distinct variable names" % self.n)

    @classmethod
    def exterior(cls, n: int, names: Sequence[str] = ()) -> AlgebraCtx:
        return cls(n, EXTERIOR, None, tuple(names))

    @classmethod
    def skew(cls, n: int, cap: int, names: Sequence[str] = ()) -> AlgebraCtx:
        return cls(n, SKEW, cap, tuple(names))

    @classmethod
    def symmetric(cls, n: int, cap: int, names: Sequence[str] = ()) -> AlgebraCtx:
        return cls(n, SYMMETRIC, cap, tuple(names))

    def with_cap(self, cap: int) -> AlgebraCtx:
        if self.rule == EXTERIOR:
            return self
        return AlgebraCtx(self.n, self.rule, cap, self.names)

    def with_n(self, n: int, names: Sequence[str] = ()) -> AlgebraCtx:
        return AlgebraCtx(n, self.rule, self.cap if self.rule != EXTERIOR else None, tuple(names))

    @property
    def truncated(self) -> bool:
        """Whether degrees above the cap exist but are not tracked."""
        return self.rule != EXTERIOR


def monomial_product(a: Monomial, b: Monomial, rule: str) -> tuple[int, Monomial] | None:
    """Sign and monomial of the word a*b, or None if it vanishes."""
    if rule == SYMMETRIC:
        return 1, tuple(x + y for x, y in zip(a, b))
    parity = 0
    above = 0  # total exponent of a on indices > j
    for j in range(len(a) - 1, -1, -1):
        if b[j]:
            if rule == EXTERIOR and a[j]:
                return None
            parity += above * b[j]
        above += a[j]
    return (-1 if parity & 1 else 1), tuple(x + y for x, y in zip(a, b))


@lru_cache(maxsize=None)
def graded_basis(ctx: AlgebraCtx, d: int) -> tuple[Monomial, ...]:
    """Monomials of degree d, ordered as ascending index words.

    For two variables x, y in degree 2 this gives x^2, xy, y^2.
    """
    if d < 0 or d > ctx.cap:
        raise DegreeError("degree %d outside 0..%d" % (d, ctx.cap))
    words = combinations(range(ctx.n), d) if ctx.rule == EXTERIOR else combinations_with_replacement(range(ctx.n), d)
    out = []
    for w in words:
        e = [0] * ctx.n
        for i in w:
            e[i] += 1
        out.append(tuple(e))
    return tuple(out)


@lru_cache(maxsize=None)
def basis_index(ctx: AlgebraCtx, d: int) -> dict[Monomial, int]:
    return {m: i for i, m in enumerate(graded_basis(ctx, d))}


def _valid_monomial(ctx: AlgebraCtx, m: Monomial) -> bool:
    if len(m) != ctx.n or any(e < 0 for e in m):
        return False
    if ctx.rule == EXTERIOR and any(e > 1 for e in m):
        return False
    return sum(m) <= ctx.cap


class SkewPoly:
    """A sparse element of the algebra described by ``ctx``.

    Treat instances as immutable; every operation returns a new element.
    """

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraCtx, terms: Mapping[Monomial, object] | None = None):
        self.ctx = ctx
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(m)
            c = as_fraction(c)
            if not c:
                continue
            if not _valid_monomial(ctx, m):
                raise ValueError("monomial %r is not valid for %r" % (m, ctx))
            clean[m] = c
        self.terms: dict[Monomial, Fraction] = clean

    @classmethod
    def _raw(cls, ctx, terms):
        p = cls.__new__(cls)
        p.ctx = ctx
        p.terms = terms
        return p

    @classmethod
    def zero(cls, ctx: AlgebraCtx) -> SkewPoly:
        return cls._raw(ctx, {})

    @classmethod
    def constant(cls, ctx: AlgebraCtx, c=1) -> SkewPoly:
        return cls(ctx, {(0,) * ctx.n: c})

    @classmethod
    def var(cls, ctx: AlgebraCtx, i: int) -> SkewPoly:
        e = [0] * ctx.n
        e[i] = 1
        return cls._raw(ctx, {tuple(e): Fraction(1)})

    @classmethod
    def linear(cls, ctx: AlgebraCtx, coeffs: Sequence) -> SkewPoly:
        if len(coeffs) != ctx.n:
            raise ValueError("linear form needs %d coefficients" % ctx.n)
        terms = {}
        for i, c in enumerate(coeffs):
            e = [0] * ctx.n
            e[i] = 1
            terms[tuple(e)] = c
        return cls(ctx, terms)

    @classmethod
    def monomial(cls, ctx: AlgebraCtx, m: Monomial, c=1) -> SkewPoly:
        return cls(ctx, {m: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SkewPoly):
            return self.ctx == other.ctx and self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, frozenset(self.terms.items())))

    def _check(self, other: SkewPoly):
        if self.ctx != other.ctx:
            raise ContextMismatchError("operands live in different algebras")

    def __add__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return SkewPoly._raw(self.ctx, terms)

    def __neg__(self):
        return SkewPoly._raw(self.ctx, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SkewPoly):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> SkewPoly:
        c = as_fraction(c)
        if not c:
            return SkewPoly.zero(self.ctx)
        return SkewPoly._raw(self.ctx, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SkewPoly):
            return mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(1 / as_fraction(other))

    def __pow__(self, k: int):
        out = SkewPoly.constant(self.ctx)
        for _ in range(k):
            out = mul(out, self)
        return out

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    @property
    def degree(self) -> int:
        """Largest degree present; -1 for zero."""
        return max(self.degrees(), default=-1)

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, d: int) -> SkewPoly:
        return SkewPoly._raw(self.ctx, {m: c for m, c in self.terms.items() if sum(m) == d})

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the first monomial in graded-basis order of the top degree."""
        d = self.degree
        if d < 0:
            return Fraction(0)
        idx = basis_index(self.ctx, d)
        m = min((m for m in self.terms if sum(m) == d), key=idx.__getitem__)
        return self.terms[m]

    def monic(self) -> SkewPoly:
        return self.scale(1 / self.leading_coefficient()) if self.terms else self

    def __repr__(self):
        return "SkewPoly(%s)" % render(self)

    def __str__(self):
        return render(self)


def mul(f: SkewPoly, g: SkewPoly) -> SkewPoly:
    """Product f*g; terms above the context cap are dropped."""
    if f.ctx != g.ctx:
        raise ContextMismatchError("operands live in different algebras")
    ctx = f.ctx
    rule = ctx.rule
    cap = ctx.cap
    out: dict[Monomial, Fraction] = {}
    gterms = [(m, c, sum(m)) for m, c in g.terms.items()]
    for a, ca in f.terms.items():
        da = sum(a)
        for b, cb, db in gterms:
            if da + db > cap:
                continue
            r = monomial_product(a, b, rule)
            if r is None:
                continue
            sign, m = r
            v = out.get(m, 0) + (ca * cb if sign > 0 else -ca * cb)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
    return SkewPoly._raw(ctx, out)


def wedge(*fs: SkewPoly) -> SkewPoly:
    out = fs[0]
    for f in fs[1:]:
        out = mul(out, f)
    return out


def _image_poly(target: AlgebraCtx, img) -> SkewPoly:
    if isinstance(img, SkewPoly):
        if img.ctx != target:
            raise ContextMismatchError("image lives in a different algebra")
        if img.degrees() - {1}:
            raise ValueError("variable images must be linear forms")
        return img
    return SkewPoly.linear(target, list(img))


def _check_skew_images(images: Sequence[SkewPoly]):
    # Over x_i x_j = -x_j x_i (i != j) only images that are scalar multiples
    # of pairwise distinct variables respect the relations.
    used = set()
    for img in images:
        if not img.terms:
            continue
        if len(img.terms) != 1:
            raise UnsupportedSubstitutionError(
                "skew_minus_one substitution needs each image to be a multiple of a single variable"
            )
        (m,) = img.terms
        k = m.index(1)
        if k in used:
            raise UnsupportedSubstitutionError("two variables map to multiples of the same variable")
        used.add(k)


def substitute(f: SkewPoly, images: Sequence, target: AlgebraCtx | None = None) -> SkewPoly:
    """Apply the algebra map sending variable i of ``f.ctx`` to ``images[i]``.

    Images are degree-1 elements of ``target`` (or coefficient sequences).
    ``target`` defaults to ``f.ctx``.
    """
    src = f.ctx
    if target is None:
        target = images[0].ctx if images and isinstance(images[0], SkewPoly) else src
    if len(images) != src.n:
        raise ValueError("need %d images, got %d" % (src.n, len(images)))
    if (src.rule == EXTERIOR) != (target.rule == EXTERIOR) or (src.rule == SYMMETRIC) != (target.rule == SYMMETRIC):
        raise UnsupportedSubstitutionError("source and target sign rules are incompatible")
    imgs = [_image_poly(target, img) for img in images]
    if target.rule == SKEW:
        _check_skew_images(imgs)
    one = SkewPoly.constant(target)
    powers: dict[tuple[int, int], SkewPoly] = {}

    def power(i, e):
        key = (i, e)
        if key not in powers:
            powers[key] = one if e == 0 else mul(power(i, e - 1), imgs[i])
        return powers[key]

    out: dict[Monomial, Fraction] = {}
    for m, c in f.terms.items():
        if sum(m) > target.cap:
            continue
        p = one
        for i, e in enumerate(m):
            if e:
                p = mul(p, power(i, e))
                if not p.terms:
                    break
        for mm, v in p.terms.items():
            s = out.get(mm, 0) + c * v
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
    return SkewPoly._raw(target, out)


def to_coords(f: SkewPoly, d: int) -> Vector:
    degs = f.degrees()
    if degs and degs != {d}:
        raise DegreeError("element is not homogeneous of degree %d" % d)
    idx = basis_index(f.ctx, d)
    v = [Fraction(0)] * len(idx)
    for m, c in f.terms.items():
        v[idx[m]] = c
    return tuple(v)


def from_coords(ctx: AlgebraCtx, d: int, v: Sequence) -> SkewPoly:
    basis = graded_basis(ctx, d)
    if len(v) != len(basis):
        raise ValueError("expected %d coordinates, got %d" % (len(basis), len(v)))
    return SkewPoly(ctx, {m: c for m, c in zip(basis, v)})


# -- text form ---------------------------------------------------------------


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def render_monomial(ctx: AlgebraCtx, m: Monomial) -> str:
    if ctx.rule == EXTERIOR:
        return "∧".join(ctx.names[i] for i, e in enumerate(m) if e)
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(ctx.names[i])
        elif e > 1:
            parts.append("%s^%d" % (ctx.names[i], e))
    return " ".join(parts)


def render(f: SkewPoly) -> str:
    """Canonical text: terms by degree, then graded-basis order.

    Coefficients are written ``p/q`` followed by a space; exterior
    monomials are joined with ``∧``, other rules juxtapose factors with a
    space.
    """
    if not f.terms:
        return "0"
    ctx = f.ctx
    order = sorted(f.terms, key=lambda m: (sum(m), basis_index(ctx, sum(m))[m]))
    out = []
    for k, m in enumerate(order):
        c = f.terms[m]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = render_monomial(ctx, m)
        if not mono:
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = "%s %s" % (_fmt_coeff(a), mono)
        if k == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append("%s %s" % (sign, body))
    return " ".join(out)


_COEFF = re.compile(r"^\d+(?:/\d+)?$")


def parse(text: str, ctx: AlgebraCtx) -> SkewPoly:
    """Inverse of :func:`render` (also accepts ``*`` between factors)."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial")
    name_idx = {nm: i for i, nm in enumerate(ctx.names)}
    # split into signed terms at top-level + / -
    chunks = re.split(r"\s*([+-])\s*", s)
    if chunks[0] == "":
        chunks = chunks[1:]
    else:
        chunks = ["+"] + chunks
    if len(chunks) % 2:
        raise ValueError("malformed polynomial %r" % text)
    out = SkewPoly.zero(ctx)
    for sign, body in zip(chunks[::2], chunks[1::2]):
        factors = [t for t in re.split(r"[\s*∧]+", body) if t]
        if not factors:
            raise ValueError("dangling sign in %r" % text)
        coeff = Fraction(1)
        if _COEFF.match(factors[0]):
            coeff = Fraction(factors.pop(0))
        term = SkewPoly.constant(ctx, -coeff if sign == "-" else coeff)
        for fac in factors:
            nm, _, e = fac.partition("^")
            if nm not in name_idx:
                raise ValueError("unknown variable %r" % nm)
            term = mul(term, SkewPoly.var(ctx, name_idx[nm]) ** (int(e) if e else 1))
        out = out + term
    return out


def polys_from_rows(ctx: AlgebraCtx, d: int, rows: Iterable[Sequence]) -> list[SkewPoly]:
    return [from_coords(ctx, d, r) for r in rows]

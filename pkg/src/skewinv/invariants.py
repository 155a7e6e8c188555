"""
Invariants of a finite matrix group acting on a graded algebra.

Everything is computed one degree at a time with exact linear algebra:
fixed spaces, the Reynolds operator (group average), a Molien-type
dimension count, and a minimal homogeneous generating set of the invariant
subalgebra.  ``beta`` is the largest degree in such a set, 0 when the only
invariants are the constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import EXTERIOR, SYMMETRIC, AlgebraCtx, SkewPoly, from_coords, graded_basis, mul, to_coords
from .errors import SkewInvError
from .groups import FiniteMatrixGroup, act, representation_matrix
from .linalg import RowBasis, as_matrix, greedy_complement, kernel_basis, sum_row_spaces


@dataclass(frozen=True)
class GradedSubspace:
    """Per-degree subspaces of an algebra, in graded-basis coordinates."""

    ctx: AlgebraCtx
    components: dict[int, RowBasis] = field(default_factory=dict)

    def component(self, d: int) -> RowBasis:
        if d in self.components:
            return self.components[d]
        return RowBasis.zero(len(graded_basis(self.ctx, d)))

    def dims(self, top: int | None = None) -> list[int]:
        top = self.ctx.cap if top is None else top
        return [self.component(d).dim for d in range(top + 1)]

    def elements(self, d: int) -> list[SkewPoly]:
        return [from_coords(self.ctx, d, r) for r in self.component(d).rows]

    def __eq__(self, other):
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        if self.ctx != other.ctx:
            return False
        degs = set(self.components) | set(other.components)
        return all(self.component(d) == other.component(d) for d in degs)


@dataclass(frozen=True)
class GeneratorSet:
    gens: tuple[tuple[int, SkewPoly], ...] = ()
    truncated: bool = False

    @property
    def beta(self) -> int:
        return max((d for d, _ in self.gens), default=0)

    @property
    def degrees(self) -> list[int]:
        return [d for d, _ in self.gens]

    def polys(self) -> list[SkewPoly]:
        return [f for _, f in self.gens]

    def in_degree(self, d: int) -> list[SkewPoly]:
        return [f for e, f in self.gens if e == d]

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def make_generator_set(polys: Iterable[SkewPoly], truncated: bool = False) -> GeneratorSet:
    gens = []
    for f in polys:
        if not f:
            raise ValueError("generators must be nonzero")
        if not f.is_homogeneous():
            raise ValueError("generators must be homogeneous")
        gens.append((f.degree, f))
    gens.sort(key=lambda t: t[0])
    return GeneratorSet(tuple(gens), truncated)


def fixed_space(G: FiniteMatrixGroup, ctx: AlgebraCtx, d: int, elements: Sequence | None = None) -> RowBasis:
    """Degree-d invariants: common kernel of rho_d(g) - I over the group generators.

    Pass ``elements`` to intersect over another list (e.g. the whole group).
    """
    N = len(graded_basis(ctx, d))
    rows = []
    for g in (G.generators if elements is None else elements):
        M = representation_matrix(g, ctx, d)
        for i, row in enumerate(M):
            r = list(row)
            r[i] -= 1
            if any(r):
                rows.append(r)
    return kernel_basis(rows, N)


def fixed_space_exhaustive(G: FiniteMatrixGroup, ctx: AlgebraCtx, d: int) -> RowBasis:
    return fixed_space(G, ctx, d, elements=G.elements)


def invariant_spaces(G: FiniteMatrixGroup, ctx: AlgebraCtx, top: int | None = None) -> GradedSubspace:
    top = ctx.cap if top is None else top
    return GradedSubspace(ctx, {d: fixed_space(G, ctx, d) for d in range(top + 1)})


def reynolds(G: FiniteMatrixGroup, f: SkewPoly) -> SkewPoly:
    """Group average (1/|G|) sum_g g.f."""
    total = SkewPoly.zero(f.ctx)
    for g in G.elements:
        total = total + act(g, f)
    return total.scale(Fraction(1, G.order))


# -- Molien-type series ------------------------------------------------------


def charpoly(A: Sequence[Sequence]) -> list[Fraction]:
    """Coefficients c_0..c_n of det(t I - A), lowest degree first (Faddeev-LeVerrier)."""
    A = as_matrix(A)
    n = len(A)
    c = [Fraction(0)] * (n + 1)
    c[n] = Fraction(1)
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{n-k+1} I
        AM = [[sum((A[i][l] * M[l][j] for l in range(n) if A[i][l] and M[l][j]), Fraction(0)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c[n - k + 1]
        M = AM
        tr = sum((sum((A[i][l] * M[l][i] for l in range(n)), Fraction(0)) for i in range(n)), Fraction(0))
        c[n - k] = -tr / k
    return c


def det_one_minus_tA(A) -> list[Fraction]:
    """det(I - tA) = t^n charpoly(1/t), coefficients lowest degree first."""
    return list(reversed(charpoly(A)))


def det_one_plus_tA(A) -> list[Fraction]:
    return [c if k % 2 == 0 else -c for k, c in enumerate(det_one_minus_tA(A))]


def series_inverse(p: Sequence[Fraction], terms: int) -> list[Fraction]:
    """First ``terms`` coefficients of 1/p for a power series with p[0] != 0."""
    if not p or not p[0]:
        raise ZeroDivisionError("constant term must be nonzero")
    q = [Fraction(0)] * terms
    q[0] = 1 / Fraction(p[0])
    for k in range(1, terms):
        s = sum((p[j] * q[k - j] for j in range(1, min(k, len(p) - 1) + 1)), Fraction(0))
        q[k] = -s * q[0]
    return q


def molien_series(G: FiniteMatrixGroup, ctx: AlgebraCtx) -> list[Fraction]:
    """Coefficients 0..cap of the invariant dimension series."""
    terms = ctx.cap + 1
    total = [Fraction(0)] * terms
    if ctx.rule == EXTERIOR:
        for g in G.elements:
            for k, c in enumerate(det_one_plus_tA(g)):
                total[k] += c
    elif ctx.rule == SYMMETRIC:
        for g in G.elements:
            for k, c in enumerate(series_inverse(det_one_minus_tA(g), terms)):
                total[k] += c
    else:
        raise SkewInvError("no Molien-type formula for the %s rule" % ctx.rule)
    return [c / G.order for c in total]


# -- subalgebras and generators ----------------------------------------------


def _product_rows(ctx: AlgebraCtx, e: int, rows, g: SkewPoly, d: int):
    for r in rows:
        p = mul(from_coords(ctx, e, r), g)
        if p:
            yield to_coords(p, d)


def subalgebra_spans(gens: GeneratorSet, ctx: AlgebraCtx, top: int) -> list[RowBasis]:
    """Spans of all words in the generators, for degrees 0..top."""
    spans = [RowBasis.full(1)]
    for d in range(1, top + 1):
        N = len(graded_basis(ctx, d))
        vecs = []
        for e, g in gens:
            if e <= d:
                vecs.extend(_product_rows(ctx, d - e, spans[d - e].rows, g, d))
        spans.append(RowBasis.span(vecs, N))
    return spans


def subalgebra_graded_span(gens: GeneratorSet, ctx: AlgebraCtx, d: int) -> RowBasis:
    return subalgebra_spans(gens, ctx, d)[d]


def _decomposables(gens, spans, ctx, d) -> RowBasis:
    # words of degree d whose last letter has degree < d
    N = len(graded_basis(ctx, d))
    vecs = []
    for e, g in gens:
        if e < d:
            vecs.extend(_product_rows(ctx, d - e, spans[d - e].rows, g, d))
    return RowBasis.span(vecs, N)


def algebra_generators(G: FiniteMatrixGroup, ctx: AlgebraCtx, cap: int | None = None) -> GeneratorSet:
    """Minimal homogeneous generators of the invariant subalgebra up to ``cap``.

    In each degree the new generators are the canonical fixed-space basis
    vectors that are not yet reached by products of lower-degree
    generators, taken greedily in echelon order.
    """
    top = ctx.cap if cap is None else min(cap, ctx.cap)
    gens: list[tuple[int, SkewPoly]] = []
    spans = [RowBasis.full(1)]
    for d in range(1, top + 1):
        fixed = fixed_space(G, ctx, d)
        words = _decomposables(gens, spans, ctx, d)
        for v in greedy_complement(fixed.rows, words):
            gens.append((d, from_coords(ctx, d, v)))
        spans.append(fixed)
    truncated = ctx.truncated or top < ctx.cap
    return GeneratorSet(tuple(gens), truncated)


def minimize_generators(gens: GeneratorSet, ctx: AlgebraCtx) -> GeneratorSet:
    """Drop generators that are words in the others, degree by degree.

    Survivors are scaled to leading coefficient 1.
    """
    top = max(gens.degrees, default=0)
    kept: list[tuple[int, SkewPoly]] = []
    spans = [RowBasis.full(1)]
    for d in range(1, top + 1):
        words = _decomposables(kept, spans, ctx, d)
        cands = [to_coords(f, d) for f in gens.in_degree(d)]
        picks = greedy_complement(cands, words)
        for v in picks:
            kept.append((d, from_coords(ctx, d, v).monic()))
        spans.append(sum_row_spaces([words, RowBasis.span(picks, words.ambient_dim)]))
    return GeneratorSet(tuple(kept), gens.truncated)

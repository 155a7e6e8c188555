"""
Subspace arrangements and their intersection ideals in the exterior algebra.

A subspace W_i of Q^m is cut out by a space S_i of linear forms; J_i is the
ideal generated by S_i, and the intersection ideal of the arrangement is
the intersection of all J_i, computed degree by degree.  Homogeneous ideals
of the exterior algebra are two-sided, so left multiples by monomials span
each component.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .algebra import AlgebraCtx, SkewPoly, from_coords, graded_basis, mul, to_coords
from .errors import DegreeError
from .groups import FiniteMatrixGroup
from .invariants import GeneratorSet, GradedSubspace
from .linalg import (
    RowBasis,
    as_vector,
    greedy_complement,
    intersect_row_spaces,
    kernel_basis,
    mat_mul,
    transpose,
)


def vanishing_forms(spanning: Sequence[Sequence], m: int) -> RowBasis:
    """Linear forms (as coefficient rows) vanishing on the span of ``spanning``."""
    return kernel_basis([as_vector(v) for v in spanning], m)


@dataclass(frozen=True)
class Subspace:
    span: RowBasis
    forms: RowBasis

    def __post_init__(self):
        m = self.span.ambient_dim
        if self.forms.ambient_dim != m:
            raise ValueError("span and forms live in different spaces")
        if self.span.dim + self.forms.dim != m:
            raise ValueError("dim(span) + dim(forms) must equal the ambient dimension")
        if self.span.rows and self.forms.rows and any(any(x for x in row) for row in mat_mul(self.forms.rows, transpose(self.span.rows))):
            raise ValueError("forms do not vanish on the span")

    @property
    def ambient_dim(self) -> int:
        return self.span.ambient_dim

    @classmethod
    def from_span(cls, vectors: Sequence[Sequence], m: int) -> Subspace:
        return cls(RowBasis.span(vectors, m), vanishing_forms(vectors, m))

    @classmethod
    def from_forms(cls, forms: Sequence[Sequence], m: int) -> Subspace:
        return cls(kernel_basis(forms, m), RowBasis.span(forms, m))


@dataclass(frozen=True)
class Arrangement:
    ambient_dim: int
    subspaces: tuple[Subspace, ...]

    def __post_init__(self):
        if any(W.ambient_dim != self.ambient_dim for W in self.subspaces):
            raise ValueError("subspaces must share the ambient dimension")

    def __len__(self):
        return len(self.subspaces)


@dataclass(frozen=True, eq=False)
class GradedIdeal(GradedSubspace):
    gens: GeneratorSet | None = None

    def is_ideal(self, top: int | None = None) -> bool:
        """Check x_i * I_{d-1} is contained in I_d for every tracked d."""
        top = self.ctx.cap if top is None else top
        for d in range(1, top + 1):
            comp = self.component(d)
            for v in left_multiples(self.ctx, self.component(d - 1), d - 1):
                if v not in comp:
                    return False
        return True


def group_arrangement(G: FiniteMatrixGroup) -> Arrangement:
    """The graphs {(v, A(g) v)} in Q^(2n), coordinates ordered x_1..x_n, y_1..y_n.

    V_g is cut out by y_i - sum_j A(g)[i][j] x_j.
    """
    n = G.n
    subs = []
    for A in G.elements:
        forms = [[-a for a in A[i]] + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        span = [[1 if j == k else 0 for j in range(n)] + [A[i][k] for i in range(n)] for k in range(n)]
        subs.append(Subspace(RowBasis.span(span, 2 * n), RowBasis.span(forms, 2 * n)))
    return Arrangement(2 * n, tuple(subs))


def xy_context(n: int) -> AlgebraCtx:
    """Exterior algebra on x_1..x_n, y_1..y_n."""
    return AlgebraCtx.exterior(2 * n, ["x%d" % (i + 1) for i in range(n)] + ["y%d" % (i + 1) for i in range(n)])


def left_multiples(ctx: AlgebraCtx, comp: RowBasis, e: int) -> list:
    """Coordinates of x_i * b for b a basis row of ``comp`` in degree e."""
    if e + 1 > ctx.cap:
        return []
    out = []
    xs = [SkewPoly.var(ctx, i) for i in range(ctx.n)]
    for row in comp.rows:
        b = from_coords(ctx, e, row)
        for x in xs:
            p = mul(x, b)
            if p:
                out.append(to_coords(p, e + 1))
    return out


def linear_ideal_component(forms: RowBasis, ctx: AlgebraCtx, d: int) -> RowBasis:
    """Degree-d part of the ideal generated by the given linear forms."""
    if d > ctx.cap:
        raise DegreeError("degree %d above cap %d" % (d, ctx.cap))
    N = len(graded_basis(ctx, d))
    if d == 0 or not forms.rows:
        return RowBasis.zero(N)
    lin = [SkewPoly.linear(ctx, r) for r in forms.rows]
    vecs = []
    for m in graded_basis(ctx, d - 1):
        mono = SkewPoly.monomial(ctx, m)
        for s in lin:
            p = mul(mono, s)
            if p:
                vecs.append(to_coords(p, d))
    return RowBasis.span(vecs, N)


def intersection_ideal(A: Arrangement, ctx: AlgebraCtx, D: int | None = None) -> GradedIdeal:
    if ctx.n != A.ambient_dim:
        raise ValueError("algebra has %d variables, arrangement lives in Q^%d" % (ctx.n, A.ambient_dim))
    D = ctx.cap if D is None else D
    comps = {0: RowBasis.zero(1)}
    for d in range(1, D + 1):
        comps[d] = intersect_row_spaces([linear_ideal_component(W.forms, ctx, d) for W in A.subspaces])
    return GradedIdeal(ctx, comps)


def minimal_generators(I: GradedSubspace, top: int | None = None) -> GeneratorSet:
    """Minimal homogeneous generators of a graded (left) ideal.

    In degree d the new generators complete x_i * I_{d-1} to a basis of I_d;
    their number is dim I_d - dim(E_1 I_{d-1}).
    """
    ctx = I.ctx
    top = ctx.cap if top is None else top
    gens = []
    for d in range(1, top + 1):
        comp = I.component(d)
        if not comp.rows:
            continue
        dec = RowBasis.span(left_multiples(ctx, I.component(d - 1), d - 1), comp.ambient_dim)
        for v in greedy_complement(comp.rows, dec):
            gens.append((d, from_coords(ctx, d, v)))
    return GeneratorSet(tuple(gens), ctx.truncated or top < ctx.cap)


def ideal_from_generators(gens: GeneratorSet | Iterable[SkewPoly], ctx: AlgebraCtx, top: int | None = None) -> GradedIdeal:
    """Components of the left ideal generated by homogeneous elements."""
    top = ctx.cap if top is None else top
    polys = gens.polys() if isinstance(gens, GeneratorSet) else list(gens)
    comps = {0: RowBasis.span([to_coords(f, 0) for f in polys if f.degree == 0], 1)}
    for d in range(1, top + 1):
        vecs = left_multiples(ctx, comps[d - 1], d - 1)
        vecs += [to_coords(f, d) for f in polys if f.degree == d]
        comps[d] = RowBasis.span(vecs, len(graded_basis(ctx, d)))
    return GradedIdeal(ctx, comps)


def random_arrangement(rng: random.Random, n: int, t: int, bound: int = 3) -> Arrangement:
    """t subspaces of Q^n with integer spanning entries in [-bound, bound].

    Each dimension is uniform in [1, n-1]; draws are retried until the
    spanning vectors are independent.
    """
    subs = []
    for _ in range(t):
        k = rng.randint(1, n - 1)
        while True:
            vecs = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(k)]
            S = Subspace.from_span(vecs, n)
            if S.span.dim == k:
                break
        subs.append(S)
    return Arrangement(n, tuple(subs))

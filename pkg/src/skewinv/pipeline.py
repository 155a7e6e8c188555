"""
Invariant generators through the group arrangement, and the degree-bound checks.

The arrangement route: build the graphs {(v, g v)} in Q^n + Q^n, take the
intersection of their linear ideals in the exterior algebra on x, y,
extract minimal ideal generators, set every y to 0, average over the group
and prune redundant results.  The output generates the invariant
subalgebra and never uses the direct fixed-space computation.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Sequence

from .algebra import EXTERIOR, SKEW, AlgebraCtx, SkewPoly, graded_basis, render, substitute
from .arrangements import (
    GradedIdeal,
    group_arrangement,
    intersection_ideal,
    left_multiples,
    minimal_generators,
    xy_context,
)
from .errors import SkewInvError
from .groups import FiniteMatrixGroup, is_signed_permutation, kron
from .invariants import (
    GeneratorSet,
    algebra_generators,
    fixed_space,
    make_generator_set,
    minimize_generators,
    reynolds,
)
from .linalg import RowBasis, identity_matrix, intersect_row_spaces, sum_row_spaces

DIRECT = "direct"
ARRANGEMENT = "arrangement"


@dataclass
class NoetherReport:
    order: int
    rule: str
    method: str
    degrees: list[int]
    beta: int
    bound: int
    passed: bool
    asserted: bool
    truncated: bool
    dims: list[int]
    generators: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class GansubReport:
    degrees: list[int]
    lhs_dims: list[int]
    rhs_dims: list[int]
    equal: list[bool]

    @property
    def all_equal(self) -> bool:
        return all(self.equal)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["all_equal"] = self.all_equal
        return d


@dataclass
class TransferRow:
    dim_v: int
    beta_sym: int
    beta_ext: int


@dataclass
class TransferReport:
    order: int
    rows: list[TransferRow]

    @property
    def max_sym(self) -> int:
        return max((r.beta_sym for r in self.rows), default=0)

    @property
    def max_ext(self) -> int:
        return max((r.beta_ext for r in self.rows), default=0)

    @property
    def holds(self) -> bool:
        return self.max_ext <= self.max_sym

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "rows": [asdict(r) for r in self.rows],
            "max_beta_sym": self.max_sym,
            "max_beta_ext": self.max_ext,
            "holds": self.holds,
        }


def hilbert_ideal_direct(G: FiniteMatrixGroup, ctx: AlgebraCtx, D: int | None = None) -> GradedIdeal:
    """Ideal generated by the positive-degree invariants, built as E_1 I_{d-1} + E_d^G."""
    D = ctx.cap if D is None else D
    comps = {0: RowBasis.zero(1)}
    for d in range(1, D + 1):
        vecs = left_multiples(ctx, comps[d - 1], d - 1)
        vecs += list(fixed_space(G, ctx, d).rows)
        comps[d] = RowBasis.span(vecs, len(graded_basis(ctx, d)))
    return GradedIdeal(ctx, comps)


def eliminate_y(gens: GeneratorSet, target: AlgebraCtx) -> GeneratorSet:
    """Send x_i -> x_i and y_i -> 0; drop generators that vanish."""
    n = target.n
    images = [SkewPoly.var(target, i) for i in range(n)] + [SkewPoly.zero(target)] * n
    out = []
    for d, f in gens:
        if f.ctx.n != 2 * n:
            raise ValueError("generators must live on %d variables" % (2 * n))
        h = substitute(f, images, target)
        if h:
            out.append((d, h))
    return GeneratorSet(tuple(out), gens.truncated)


def _x_only_mask(n: int, d: int) -> list[bool]:
    return [not any(m[n:]) for m in graded_basis(xy_context(n), d)]


def hilbert_ideal_via_arrangement(G: FiniteMatrixGroup, ctx: AlgebraCtx, I: GradedIdeal | None = None) -> dict[int, RowBasis]:
    """((I' + (y)) ∩ Λ(x))_d in Λ(x) coordinates, for d = 1..2n."""
    n = ctx.n
    XY = xy_context(n)
    if I is None:
        I = intersection_ideal(group_arrangement(G), XY)
    out = {}
    for d in range(1, 2 * n + 1):
        basis = graded_basis(XY, d)
        N = len(basis)
        mask = _x_only_mask(n, d)
        unit = [[1 if j == i else 0 for j in range(N)] for i in range(N)]
        yspan = RowBasis.span([unit[i] for i in range(N) if not mask[i]], N)
        xspan = RowBasis.span([unit[i] for i in range(N) if mask[i]], N)
        lhs = intersect_row_spaces([sum_row_spaces([I.component(d), yspan]), xspan])
        if d > n:
            out[d] = RowBasis.zero(0)
            continue
        # x-only monomials of Λ(x, y) correspond to Λ(x) monomials by truncation
        xidx = {m[:n]: j for j, m in enumerate(graded_basis(ctx, d))}
        cols = [(i, xidx[m[:n]]) for i, m in enumerate(basis) if mask[i]]
        Nx = len(xidx)
        rows = []
        for r in lhs.rows:
            v = [Fraction(0)] * Nx
            for i, j in cols:
                v[j] = r[i]
            rows.append(v)
        out[d] = RowBasis.span(rows, Nx)
    return out


def check_gansub(G: FiniteMatrixGroup, ctx: AlgebraCtx) -> GansubReport:
    if ctx.rule != EXTERIOR:
        raise SkewInvError("the arrangement identity is checked over the exterior algebra only")
    n = ctx.n
    lhs = hilbert_ideal_via_arrangement(G, ctx)
    rhs = hilbert_ideal_direct(G, ctx)
    degrees = list(range(1, 2 * n + 1))
    ldims, rdims, eq = [], [], []
    for d in degrees:
        r = rhs.component(d) if d <= n else RowBasis.zero(0)
        ldims.append(lhs[d].dim)
        rdims.append(r.dim)
        eq.append(lhs[d] == r)
    return GansubReport(degrees, ldims, rdims, eq)


def arrangement_ideal_generators(G: FiniteMatrixGroup) -> GeneratorSet:
    """Minimal generators of the intersection ideal of the group arrangement."""
    XY = xy_context(G.n)
    return minimal_generators(intersection_ideal(group_arrangement(G), XY))


def invariant_generators_via_arrangement(G: FiniteMatrixGroup, ctx: AlgebraCtx) -> GeneratorSet:
    if ctx.rule != EXTERIOR:
        raise SkewInvError("the arrangement method needs the exterior rule")
    if ctx.n != G.n:
        raise ValueError("group dimension %d != variable count %d" % (G.n, ctx.n))
    ideal_gens = arrangement_ideal_generators(G)
    xs = eliminate_y(ideal_gens, ctx)
    averaged = [reynolds(G, f) for _, f in xs]
    return minimize_generators(make_generator_set(f for f in averaged if f), ctx)


def noether_check(G: FiniteMatrixGroup, ctx: AlgebraCtx, method: str = DIRECT) -> NoetherReport:
    """beta against |G|; the bound is asserted only for the exterior rule."""
    if method == DIRECT:
        gens = algebra_generators(G, ctx)
    elif method == ARRANGEMENT:
        gens = invariant_generators_via_arrangement(G, ctx)
    else:
        raise ValueError("unknown method %r" % (method,))
    dims = [fixed_space(G, ctx, d).dim for d in range(ctx.cap + 1)]
    return NoetherReport(
        order=G.order,
        rule=ctx.rule,
        method=method,
        degrees=gens.degrees,
        beta=gens.beta,
        bound=G.order,
        passed=gens.beta <= G.order,
        asserted=ctx.rule == EXTERIOR,
        truncated=gens.truncated,
        dims=dims,
        generators=[render(f) for f in gens.polys()],
    )


def is_squarefree(f: SkewPoly) -> bool:
    return all(e <= 1 for m in f.terms for e in m)


def _require_skew_signed(G: FiniteMatrixGroup, ctx: AlgebraCtx):
    if ctx.rule != SKEW:
        raise SkewInvError("the square-free probe needs the skew_minus_one rule")
    if not all(is_signed_permutation(g) for g in G.elements):
        raise SkewInvError("the ideal of squares is G-stable only for signed permutation groups here")


def squarefree_probe(G: FiniteMatrixGroup, ctx: AlgebraCtx, cap: int | None = None) -> list[tuple[int, SkewPoly, bool]]:
    """Minimal invariant generators above degree |G|, each with a square-free flag."""
    _require_skew_signed(G, ctx)
    if cap is not None:
        ctx = ctx.with_cap(cap)
    gens = algebra_generators(G, ctx)
    return [(d, f, is_squarefree(f)) for d, f in gens if d > G.order]


def squarefree_invariant_dims(G: FiniteMatrixGroup, ctx: AlgebraCtx) -> dict[int, int]:
    """Dimension of the square-free invariants in each degree |G|+1..cap.

    Any nonzero entry would be a square-free invariant above the bound.
    """
    _require_skew_signed(G, ctx)
    out = {}
    for d in range(G.order + 1, ctx.cap + 1):
        basis = graded_basis(ctx, d)
        N = len(basis)
        sf = RowBasis.span([[1 if j == i else 0 for j in range(N)] for i, m in enumerate(basis) if max(m) <= 1], N)
        out[d] = intersect_row_spaces([fixed_space(G, ctx, d), sf]).dim
    return out


def tensor_with_trivial(G: FiniteMatrixGroup, k: int) -> FiniteMatrixGroup:
    """G acting on W ⊗ Q^k, coordinates (w, v) ordered w-major: A(g) ⊗ I_k."""
    I = identity_matrix(k)
    elements = tuple(kron(g, I) for g in G.elements)
    generators = tuple(kron(g, I) for g in G.generators)
    return FiniteMatrixGroup(G.n * k, elements, generators, G.identity_index)


def bound_transference_experiment(G: FiniteMatrixGroup, v_dims: Sequence[int], w_dim: int | None = None) -> TransferReport:
    """beta over the symmetric and exterior algebras of W ⊗ V for each dim V.

    The symmetric side is capped at |G|, where the classical bound
    guarantees completeness.
    """
    if w_dim is not None and w_dim != G.n:
        raise ValueError("group acts on dimension %d, not %d" % (G.n, w_dim))
    rows = []
    for k in v_dims:
        Gk = tensor_with_trivial(G, k)
        m = G.n * k
        b_sym = algebra_generators(Gk, AlgebraCtx.symmetric(m, G.order)).beta
        b_ext = algebra_generators(Gk, AlgebraCtx.exterior(m)).beta
        rows.append(TransferRow(k, b_sym, b_ext))
    return TransferReport(G.order, rows)

import random
from fractions import Fraction as Q

import pytest
import sympy

from randgen import rand_homogeneous
from skewinv.algebra import AlgebraCtx, SkewPoly, to_coords
from skewinv.catalog import BATTERY, SIGN_LINE, SWAP, TWO_COPIES_SIGN
from skewinv.errors import SkewInvError
from skewinv.groups import enumerate_group
from skewinv.invariants import (
    algebra_generators,
    charpoly,
    fixed_space,
    fixed_space_exhaustive,
    make_generator_set,
    minimize_generators,
    molien_series,
    reynolds,
    series_inverse,
    subalgebra_graded_span,
    subalgebra_spans,
)
from skewinv.linalg import RowBasis, in_row_space

E2 = AlgebraCtx.exterior(2, ("x", "y"))
E4 = AlgebraCtx.exterior(4, ("x1", "x2", "y1", "y2"))
F2 = AlgebraCtx.skew(2, 4, ("x", "y"))


def sympy_molien(G, ctx):
    """Oracle: expand the Molien-type sums symbolically."""
    t = sympy.symbols("t")
    total = 0
    for g in G.elements:
        A = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in g])
        I = sympy.eye(len(g))
        if ctx.rule == "exterior":
            total += (I + t * A).det()
        else:
            total += sympy.series(1 / (I - t * A).det(), t, 0, ctx.cap + 1).removeO()
    poly = sympy.Poly(sympy.expand(total / G.order), t)
    return [Q(str(poly.coeff_monomial(t ** k))) for k in range(ctx.cap + 1)]


def test_fixed_space_examples():
    x, y = SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)
    swap = enumerate_group([SWAP])
    assert fixed_space(swap, E2, 1) == RowBasis.span([to_coords(x + y, 1)], 2)
    sign = enumerate_group([SIGN_LINE])
    assert fixed_space(sign, E2, 1) == RowBasis.span([to_coords(x, 1)], 2)
    two = enumerate_group([TWO_COPIES_SIGN])
    B = fixed_space(two, E4, 2)
    x1, x2, y1, y2 = (SkewPoly.var(E4, i) for i in range(4))
    assert B == RowBasis.span([to_coords(x1 * x2, 2), to_coords(y1 * y2, 2)], 6)


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_generators_suffice_for_fixed_space(b):
    G, ctx = b.group(), b.exterior()
    for d in range(ctx.n + 1):
        assert fixed_space(G, ctx, d) == fixed_space_exhaustive(G, ctx, d)


def test_reynolds_examples():
    x, y = SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)
    swap = enumerate_group([SWAP])
    assert reynolds(swap, x) == (x + y).scale(Q(1, 2))
    assert reynolds(swap, x + y) == x + y
    sign = enumerate_group([SIGN_LINE])
    assert reynolds(sign, y) == SkewPoly.zero(E2)


def test_molien_examples():
    triv = enumerate_group([], n=2)
    assert molien_series(triv, E2) == [1, 2, 1]
    assert molien_series(enumerate_group([SWAP]), E2) == [1, 1, 0]
    assert molien_series(enumerate_group([TWO_COPIES_SIGN]), E4) == [1, 2, 2, 2, 1]
    with pytest.raises(SkewInvError):
        molien_series(enumerate_group([SWAP]), F2)


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_molien_matches_sympy_and_fixed_dims(b):
    G = b.group()
    for ctx in (b.exterior(), AlgebraCtx.symmetric(b.n, b.n + 1)):
        series = molien_series(G, ctx)
        assert series == sympy_molien(G, ctx)
        assert series == [fixed_space(G, ctx, d).dim for d in range(ctx.cap + 1)]


def test_charpoly_against_sympy():
    rng = random.Random(1)
    lam = sympy.symbols("lam")
    for _ in range(10):
        A = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
        expected = sympy.Poly(sympy.Matrix(A).charpoly(lam).as_expr(), lam).all_coeffs()[::-1]
        assert charpoly(A) == [Q(int(c)) for c in expected]


def test_series_inverse():
    assert series_inverse([1, -1], 5) == [1, 1, 1, 1, 1]
    assert series_inverse([1, 0, -1], 5) == [1, 0, 1, 0, 1]


def test_subalgebra_span_examples():
    x, y = SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)
    assert subalgebra_graded_span(make_generator_set([x + y]), E2, 2).dim == 0
    assert subalgebra_graded_span(make_generator_set([x, y]), E2, 2) == RowBasis.full(1)
    fx, fy = SkewPoly.var(F2, 0), SkewPoly.var(F2, 1)
    S = subalgebra_graded_span(make_generator_set([fx + fy]), F2, 2)
    assert S == RowBasis.span([to_coords(fx * fx + fy * fy, 2)], 3)


def test_algebra_generator_examples():
    x, y = SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)
    gens = algebra_generators(enumerate_group([SWAP]), E2)
    assert gens.polys() == [x + y] and gens.beta == 1
    gens = algebra_generators(enumerate_group([TWO_COPIES_SIGN]), E4)
    x1, x2, y1, y2 = (SkewPoly.var(E4, i) for i in range(4))
    assert gens.polys() == [x1, x2, y1 * y2] and gens.beta == 2
    fx, fy = SkewPoly.var(F2, 0), SkewPoly.var(F2, 1)
    gens = algebra_generators(enumerate_group([SWAP]), F2)
    assert gens.polys() == [fx + fy, fx ** 3 + fy ** 3] and gens.beta == 3
    assert gens.truncated


def test_trivial_invariant_ring_has_beta_zero():
    D4 = BATTERY[-1]
    gens = algebra_generators(D4.group(), D4.exterior())
    assert len(gens) == 0 and gens.beta == 0


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_generators_complete_and_minimal(b):
    G, ctx = b.group(), b.exterior()
    gens = algebra_generators(G, ctx)
    spans = subalgebra_spans(gens, ctx, ctx.n)
    for d in range(ctx.n + 1):
        assert spans[d] == fixed_space(G, ctx, d)
    for k, (d, f) in enumerate(gens.gens):
        others = make_generator_set(g for j, (_, g) in enumerate(gens.gens) if j != k)
        assert not in_row_space(to_coords(f, d), subalgebra_graded_span(others, ctx, d))


def test_minimize_drops_redundant_generators():
    x, y = SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)
    gens = make_generator_set([x, (x + y).scale(2), y, x * y])
    out = minimize_generators(gens, E2)
    assert out.degrees == [1, 1]
    assert subalgebra_graded_span(out, E2, 2) == RowBasis.full(1)


def test_reynolds_properties_on_random_elements():
    rng = random.Random(2)
    for b in BATTERY:
        G, ctx = b.group(), b.exterior()
        for _ in range(5):
            d = rng.randint(0, ctx.n)
            f = rand_homogeneous(rng, ctx, d)
            r = reynolds(G, f)
            assert reynolds(G, r) == r
            assert in_row_space(to_coords(r, d), fixed_space(G, ctx, d)) if r else True
            assert r.degrees() <= {d}

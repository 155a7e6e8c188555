import random

import pytest

from randgen import rand_homogeneous
from skewinv.algebra import AlgebraCtx, SkewPoly, to_coords
from skewinv.arrangements import xy_context
from skewinv.catalog import BATTERY, SIGN_LINE, SWAP, TWO_COPIES_SIGN
from skewinv.errors import SkewInvError
from skewinv.groups import act, enumerate_group
from skewinv.invariants import (
    fixed_space,
    make_generator_set,
    reynolds,
    subalgebra_graded_span,
)
from skewinv.linalg import RowBasis
from skewinv.pipeline import (
    ARRANGEMENT,
    DIRECT,
    bound_transference_experiment,
    check_gansub,
    eliminate_y,
    hilbert_ideal_direct,
    invariant_generators_via_arrangement,
    noether_check,
    squarefree_invariant_dims,
    squarefree_probe,
    tensor_with_trivial,
)

E2 = AlgebraCtx.exterior(2, ("x", "y"))
E4 = AlgebraCtx.exterior(4, ("x1", "x2", "y1", "y2"))
F2 = AlgebraCtx.skew(2, 4, ("x", "y"))


def xy():
    return SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)


def test_hilbert_ideal_direct_examples():
    x, y = xy()
    I = hilbert_ideal_direct(enumerate_group([SIGN_LINE]), E2)
    assert I.component(1) == RowBasis.span([to_coords(x, 1)], 2)
    assert I.component(2) == RowBasis.full(1)
    I = hilbert_ideal_direct(enumerate_group([SWAP]), E2)
    assert I.component(1) == RowBasis.span([to_coords(x + y, 1)], 2)
    assert I.component(2) == RowBasis.full(1)
    I = hilbert_ideal_direct(enumerate_group([], n=3), AlgebraCtx.exterior(3))
    assert [I.component(d).dim for d in (1, 2, 3)] == [3, 3, 1]
    assert I.is_ideal()


def test_eliminate_y_examples():
    X1 = AlgebraCtx.exterior(1, ("x",))
    XY1 = xy_context(1)
    x, y = SkewPoly.var(XY1, 0), SkewPoly.var(XY1, 1)
    assert len(eliminate_y(make_generator_set([x * y]), X1)) == 0
    out = eliminate_y(make_generator_set([y - x]), X1)
    assert out.polys() == [-SkewPoly.var(X1, 0)]
    XY2 = xy_context(2)
    x1, x2, y1, y2 = (SkewPoly.var(XY2, i) for i in range(4))
    X2 = AlgebraCtx.exterior(2)
    out = eliminate_y(make_generator_set([y1 + y2 - x1 - x2]), X2)
    assert out.polys() == [-(SkewPoly.var(X2, 0) + SkewPoly.var(X2, 1))]


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_gansub_identity(b):
    rep = check_gansub(b.group(), b.exterior())
    assert rep.all_equal
    assert rep.degrees == list(range(1, 2 * b.n + 1))


def test_gansub_rejects_skew():
    with pytest.raises(SkewInvError):
        check_gansub(enumerate_group([SWAP]), F2)


def test_arrangement_method_examples():
    x, y = xy()
    assert invariant_generators_via_arrangement(enumerate_group([SWAP]), E2).polys() == [x + y]
    # the sign line keeps its linear invariant x
    assert invariant_generators_via_arrangement(enumerate_group([SIGN_LINE]), E2).polys() == [x]
    gens = invariant_generators_via_arrangement(enumerate_group([TWO_COPIES_SIGN]), E4)
    assert gens.beta == 2
    y1y2 = SkewPoly.var(E4, 2) * SkewPoly.var(E4, 3)
    assert gens.in_degree(2) == [y1y2]


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_arrangement_generators_generate_fixed_ring(b):
    G, ctx = b.group(), b.exterior()
    gens = invariant_generators_via_arrangement(G, ctx)
    for d in range(ctx.n + 1):
        assert subalgebra_graded_span(gens, ctx, d) == fixed_space(G, ctx, d)


def test_noether_examples():
    rep = noether_check(enumerate_group([SWAP]), E2)
    assert rep.beta == 1 and rep.passed and rep.asserted
    rep = noether_check(enumerate_group([TWO_COPIES_SIGN]), E4, ARRANGEMENT)
    assert rep.beta == 2 == rep.bound and rep.passed
    rep = noether_check(enumerate_group([SWAP]), F2)
    assert rep.beta == 3 and not rep.passed and not rep.asserted
    assert rep.generators == ["x + y", "x^3 + y^3"]
    with pytest.raises(ValueError):
        noether_check(enumerate_group([SWAP]), E2, "magic")


def test_noether_report_is_json_friendly():
    import json

    doc = noether_check(enumerate_group([SWAP]), E2, DIRECT).to_dict()
    assert json.loads(json.dumps(doc)) == doc


def test_squarefree_probe_examples():
    probe = squarefree_probe(enumerate_group([SWAP]), F2)
    assert [(d, str(f), sf) for d, f, sf in probe] == [(3, "x^3 + y^3", False)]
    assert squarefree_probe(enumerate_group([], n=2), F2) == []
    with pytest.raises(SkewInvError):
        squarefree_probe(enumerate_group([SWAP]), E2)
    with pytest.raises(SkewInvError):
        squarefree_probe(enumerate_group([[[0, -1], [1, -1]]]), AlgebraCtx.skew(2, 4))


def test_no_squarefree_invariants_above_order():
    # for swap on two variables, x y is anti-invariant and nothing square-free sits above degree 2
    dims = squarefree_invariant_dims(enumerate_group([SWAP]), AlgebraCtx.skew(2, 6))
    assert set(dims) == {3, 4, 5, 6} and not any(dims.values())
    D4 = BATTERY[-1]
    dims = squarefree_invariant_dims(D4.group(), AlgebraCtx.skew(2, 6))
    assert not any(dims.values())


def test_transfer_table():
    rep = bound_transference_experiment(enumerate_group([[[-1]]]), [1, 2, 3])
    assert [(r.dim_v, r.beta_sym, r.beta_ext) for r in rep.rows] == [(1, 2, 0), (2, 2, 2), (3, 2, 2)]
    assert rep.holds and rep.max_ext <= rep.max_sym
    with pytest.raises(ValueError):
        bound_transference_experiment(enumerate_group([[[-1]]]), [1], w_dim=2)


def test_tensor_with_trivial_acts_blockwise():
    G = enumerate_group([SWAP])
    G2 = tensor_with_trivial(G, 2)
    assert G2.n == 4 and G2.order == 2
    # w-major: (w1 v1, w1 v2, w2 v1, w2 v2); swap exchanges w1 and w2
    assert G2.elements[1 - G2.identity_index] == ((0, 0, 1, 0), (0, 0, 0, 1), (1, 0, 0, 0), (0, 1, 0, 0))


def test_reynolds_commutes_with_action():
    rng = random.Random(8)
    for b in BATTERY:
        G, ctx = b.group(), b.exterior()
        for _ in range(5):
            f = rand_homogeneous(rng, ctx, rng.randint(1, ctx.n))
            g = rng.choice(G.elements)
            assert reynolds(G, act(g, f)) == reynolds(G, f)

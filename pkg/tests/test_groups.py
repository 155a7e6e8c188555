import random

import pytest

from randgen import rand_poly
from skewinv.algebra import AlgebraCtx, SkewPoly
from skewinv.catalog import BATTERY, S3_A, S3_B, SWAP, Z3_COMPANION
from skewinv.errors import EnumerationCapExceeded, NotInvertibleError, UnsupportedSubstitutionError
from skewinv.groups import act, enumerate_group, mat_mul, representation_matrix
from skewinv.linalg import identity_matrix

E2 = AlgebraCtx.exterior(2, ("x", "y"))


def int_matmul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def test_enumerate_examples():
    assert enumerate_group([SWAP]).order == 2
    A = Z3_COMPANION
    assert int_matmul(int_matmul(A, A), A) == [[1, 0], [0, 1]]
    assert int_matmul(A, A) != [[1, 0], [0, 1]]
    assert enumerate_group([Z3_COMPANION]).order == 3
    assert enumerate_group([S3_A, S3_B]).order == 6


def test_enumerate_errors():
    with pytest.raises(EnumerationCapExceeded):
        enumerate_group([[[1, 1], [0, 1]]], cap=100)
    with pytest.raises(NotInvertibleError):
        enumerate_group([[[1, 1], [1, 1]]])


def test_identity_first_and_generator_order_irrelevant():
    G = enumerate_group([S3_A, S3_B])
    H = enumerate_group([S3_B, S3_A])
    assert G.elements[G.identity_index] == identity_matrix(3)
    assert G.element_set() == H.element_set()


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_element_orders_divide_group_order(b):
    G = b.group()
    assert all(G.order % G.element_order(g) == 0 for g in G.elements)


def test_act_examples():
    x, y = SkewPoly.var(E2, 0), SkewPoly.var(E2, 1)
    assert act(SWAP, x) == y
    assert act([[1, 0], [0, -1]], x * y) == -(x * y)
    f = x + x * y
    assert act([[1, 0], [0, 1]], f) == f


def test_act_skew_requires_signed_permutation():
    F = AlgebraCtx.skew(2, 3)
    with pytest.raises(UnsupportedSubstitutionError):
        act([[1, 1], [0, 1]], SkewPoly.var(F, 0))
    assert act([[0, -1], [1, 0]], SkewPoly.var(F, 0)) == -SkewPoly.var(F, 1)


def test_representation_matrix_examples():
    G = enumerate_group([SWAP])
    for g in G.elements:
        assert representation_matrix(g, E2, 0) == ((1,),)
    assert representation_matrix(SWAP, E2, 2) == ((-1,),)
    ctx = AlgebraCtx.exterior(3)
    for d in range(4):
        assert representation_matrix(identity_matrix(3), ctx, d) == identity_matrix(len(representation_matrix(identity_matrix(3), ctx, d)))


@pytest.mark.parametrize("b", BATTERY, ids=lambda b: b.name)
def test_right_action_and_antihomomorphism(b):
    G = b.group()
    ctx = b.exterior()
    rng = random.Random(5)
    for _ in range(10):
        g, h = rng.choice(G.elements), rng.choice(G.elements)
        f = rand_poly(rng, ctx)
        assert act(g, act(h, f)) == act(mat_mul(h, g), f)
        for d in range(ctx.n + 1):
            assert representation_matrix(mat_mul(g, h), ctx, d) == mat_mul(
                representation_matrix(h, ctx, d), representation_matrix(g, ctx, d)
            )

"""
Finite matrix groups over Q and their action on graded algebras.

The action is by substitution, g.f = f(A(g) x): the variable x_j is sent
to sum_k A(g)[j][k] x_k.  This is a right action,
act(g, act(h, f)) == act(h*g, f); fixed spaces and the Reynolds operator
agree with those of the matching left action.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import SKEW, AlgebraCtx, SkewPoly, graded_basis, substitute, to_coords
from .errors import ContextMismatchError, EnumerationCapExceeded, NotInvertibleError, UnsupportedSubstitutionError
from .linalg import Matrix, as_matrix, identity_matrix, mat_mul, rref, transpose

DEFAULT_CAP = 10_000


def matrix_key(A: Matrix) -> str:
    """Canonical row-major string of the entries, used for deduplication."""
    return ";".join(",".join(str(x) for x in row) for row in A)


def is_invertible(A: Matrix) -> bool:
    return rref(A)[2] == len(A)


def is_signed_permutation(A: Matrix) -> bool:
    n = len(A)
    seen = set()
    for row in A:
        nz = [j for j, x in enumerate(row) if x]
        if len(nz) != 1 or nz[0] in seen:
            return False
        seen.add(nz[0])
    return len(seen) == n


def kron(A: Matrix, B: Matrix) -> Matrix:
    return tuple(
        tuple(a * b for a in ra for b in rb)
        for ra in A
        for rb in B
    )


@dataclass(frozen=True)
class FiniteMatrixGroup:
    n: int
    elements: tuple[Matrix, ...]
    generators: tuple[Matrix, ...]
    identity_index: int = 0

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element_set(self) -> frozenset[str]:
        return frozenset(matrix_key(g) for g in self.elements)

    def element_order(self, g: Matrix) -> int:
        e = identity_matrix(self.n)
        k, p = 1, g
        while p != e:
            p = mat_mul(p, g)
            k += 1
        return k


def enumerate_group(generators: Iterable[Sequence[Sequence]], cap: int = DEFAULT_CAP, n: int | None = None) -> FiniteMatrixGroup:
    """Close ``generators`` under multiplication, breadth first from the identity.

    Raises EnumerationCapExceeded once more than ``cap`` elements are found.
    """
    gens = [as_matrix(g) for g in generators]
    if n is None:
        if not gens:
            raise ValueError("dimension needed for an empty generator list")
        n = len(gens[0])
    for g in gens:
        if len(g) != n or any(len(row) != n for row in g):
            raise ValueError("generators must all be %dx%d" % (n, n))
        if not is_invertible(g):
            raise NotInvertibleError("generator %s is singular" % matrix_key(g))
    e = identity_matrix(n)
    elements = [e]
    seen = {matrix_key(e)}
    queue = deque([e])
    while queue:
        h = queue.popleft()
        for g in gens:
            p = mat_mul(h, g)
            k = matrix_key(p)
            if k in seen:
                continue
            seen.add(k)
            elements.append(p)
            if len(elements) > cap:
                raise EnumerationCapExceeded("group has more than %d elements" % cap)
            queue.append(p)
    return FiniteMatrixGroup(n, tuple(elements), tuple(gens), 0)


def group_from_elements(elements: Sequence[Matrix], generators: Sequence[Matrix] | None = None) -> FiniteMatrixGroup:
    """Wrap an already closed element list (closure is checked)."""
    els = [as_matrix(g) for g in elements]
    n = len(els[0])
    keys = {matrix_key(g) for g in els}
    for a in els:
        for b in els:
            if matrix_key(mat_mul(a, b)) not in keys:
                raise ValueError("element list is not closed under multiplication")
    e = identity_matrix(n)
    gens = tuple(as_matrix(g) for g in generators) if generators is not None else tuple(els)
    return FiniteMatrixGroup(n, tuple(els), gens, els.index(e))


def _images(g: Matrix, ctx: AlgebraCtx) -> list[SkewPoly]:
    if len(g) != ctx.n:
        raise ContextMismatchError("%dx%d matrix cannot act on %d variables" % (len(g), len(g), ctx.n))
    if ctx.rule == SKEW and not is_signed_permutation(g):
        raise UnsupportedSubstitutionError("the skew rule admits only signed permutation matrices")
    return [SkewPoly.linear(ctx, row) for row in g]


def act(g: Sequence[Sequence], f: SkewPoly) -> SkewPoly:
    g = as_matrix(g)
    return substitute(f, _images(g, f.ctx), f.ctx)


@lru_cache(maxsize=4096)
def _rep_matrix(g: Matrix, ctx: AlgebraCtx, d: int) -> Matrix:
    imgs = _images(g, ctx)
    cols = [to_coords(substitute(SkewPoly._raw(ctx, {m: Fraction(1)}), imgs, ctx), d) for m in graded_basis(ctx, d)]
    if not cols:
        return ()
    return transpose(cols)


def representation_matrix(g: Sequence[Sequence], ctx: AlgebraCtx, d: int) -> Matrix:
    """Matrix of f -> act(g, f) on degree-d coordinates (columns are images of basis monomials)."""
    return _rep_matrix(as_matrix(g), ctx, d)

"""
Exact dense linear algebra over the rationals.

Matrices are row-major tuples of tuples of ``Fraction``.  Subspaces are held
as a :class:`RowBasis`: the nonzero rows of a reduced row-echelon form, which
is canonical, so two subspaces are equal iff their ``RowBasis`` values are.

    >>> B = RowBasis.span([[2, 4], [1, 2]], 2)
    >>> B.rows
    ((Fraction(1, 1), Fraction(2, 1)),)
    >>> in_row_space([3, 6], B)
    True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted: %r" % (x,))
    return Fraction(x)


def as_vector(v: Iterable) -> Vector:
    return tuple(as_fraction(x) for x in v)


def as_matrix(M: Iterable[Iterable]) -> Matrix:
    return tuple(as_vector(row) for row in M)


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> list[int]:
    """In-place Gauss-Jordan elimination. Returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        p = r
        while p < nrows and not rows[p][c]:
            p += 1
        if p == nrows:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        lead = prow[c]
        if lead != 1:
            inv = 1 / lead
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] *= inv
        nz = [j for j in range(c + 1, ncols) if prow[j]]
        for i in range(nrows):
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if not f:
                continue
            row[c] = _ZERO
            for j in nz:
                row[j] -= f * prow[j]
        pivots.append(c)
        r += 1
    return pivots


def rref(M: Sequence[Sequence], ncols: int | None = None) -> tuple[Matrix, list[int], int]:
    """Reduced row-echelon form of ``M``.

    Returns ``(R, pivots, rank)``; ``R`` has the same shape as ``M`` with the
    zero rows at the bottom.
    """
    rows = [list(as_vector(row)) for row in M]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != ncols:
            raise ValueError("ragged matrix")
    pivots = _rref_rows(rows, ncols)
    return tuple(tuple(row) for row in rows), pivots, len(pivots)


@dataclass(frozen=True)
class RowBasis:
    """A subspace of Q^ambient_dim in canonical (reduced echelon) form."""

    ambient_dim: int
    rows: Matrix = ()

    @classmethod
    def span(cls, vectors: Iterable[Iterable], ambient_dim: int) -> RowBasis:
        R, _, rank = rref(list(vectors), ambient_dim)
        return cls(ambient_dim, R[:rank])

    @classmethod
    def zero(cls, ambient_dim: int) -> RowBasis:
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> RowBasis:
        return cls(ambient_dim, identity_matrix(ambient_dim))

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.rows]

    def __contains__(self, v) -> bool:
        return in_row_space(v, self)

    def __len__(self) -> int:
        return len(self.rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n))


def zero_matrix(rows: int, cols: int) -> Matrix:
    return tuple((_ZERO,) * cols for _ in range(rows))


def transpose(M: Sequence[Sequence], ncols: int | None = None) -> Matrix:
    if not M:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*M))


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(sum((a * b for a, b in zip(row, col) if a and b), _ZERO) for col in Bt) for row in A)


def mat_sub(A: Sequence[Sequence], B: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(a - b for a, b in zip(ra, rb)) for ra, rb in zip(A, B))


def kernel_basis(M: Sequence[Sequence], ncols: int | None = None) -> RowBasis:
    """Basis of {v : M v = 0}."""
    rows = [list(as_vector(row)) for row in M]
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for a matrix with no rows")
        ncols = len(rows[0])
    pivots = _rref_rows(rows, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i, p in enumerate(pivots):
            v[p] = -rows[i][f]
        basis.append(v)
    return RowBasis.span(basis, ncols)


def annihilator(B: RowBasis) -> RowBasis:
    """The orthogonal complement under the standard pairing."""
    return kernel_basis(B.rows, B.ambient_dim)


def intersect_row_spaces(spaces: Sequence[RowBasis]) -> RowBasis:
    # X1 ∩ ... ∩ Xk is the common kernel of all their annihilators.
    if not spaces:
        raise ValueError("intersection of an empty family of subspaces")
    m = spaces[0].ambient_dim
    if any(S.ambient_dim != m for S in spaces):
        raise ValueError("ambient dimensions differ")
    if len(spaces) == 1:
        return spaces[0]
    for S in spaces:
        if S.dim == 0:
            return RowBasis.zero(m)
    ann = []
    for S in spaces:
        if S.dim < m:
            ann.extend(annihilator(S).rows)
    return kernel_basis(ann, m)


def sum_row_spaces(spaces: Sequence[RowBasis], ambient_dim: int | None = None) -> RowBasis:
    if ambient_dim is None:
        if not spaces:
            raise ValueError("ambient_dim required for an empty sum")
        ambient_dim = spaces[0].ambient_dim
    if any(S.ambient_dim != ambient_dim for S in spaces):
        raise ValueError("ambient dimensions differ")
    return RowBasis.span([row for S in spaces for row in S.rows], ambient_dim)


def reduce_vector(v: Sequence, B: RowBasis) -> list[Fraction]:
    """Remainder of ``v`` after clearing the pivot entries of ``B``."""
    w = list(as_vector(v))
    if len(w) != B.ambient_dim:
        raise ValueError("vector length %d != ambient dimension %d" % (len(w), B.ambient_dim))
    for row, p in zip(B.rows, B.pivots):
        f = w[p]
        if f:
            for j, x in enumerate(row):
                if x:
                    w[j] -= f * x
    return w


def in_row_space(v: Sequence, B: RowBasis) -> bool:
    return not any(reduce_vector(v, B))


class EchelonBuilder:
    """Incrementally grown echelon basis for membership and complement tests.

    Rows are kept reduced against earlier rows only; reducing a vector by
    the rows in insertion order clears every pivot.
    """

    def __init__(self, ambient_dim: int, rows: Iterable[Sequence] = ()):
        self.ambient_dim = ambient_dim
        self._rows: list[tuple[int, list[Fraction]]] = []
        for row in rows:
            self.add(row)

    @property
    def dim(self) -> int:
        return len(self._rows)

    def reduce(self, v: Sequence) -> list[Fraction]:
        w = list(as_vector(v))
        for p, row in self._rows:
            f = w[p]
            if f:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        w[j] -= f * row[j]
        return w

    def add(self, v: Sequence) -> bool:
        """Add ``v``; return False if it was already in the span."""
        w = self.reduce(v)
        for p, x in enumerate(w):
            if x:
                break
        else:
            return False
        inv = 1 / w[p]
        self._rows.append((p, [y * inv if y else _ZERO for y in w]))
        return True

    def __contains__(self, v) -> bool:
        return not any(self.reduce(v))

    def basis(self) -> RowBasis:
        return RowBasis.span([row for _, row in self._rows], self.ambient_dim)


def greedy_complement(candidates: Iterable[Sequence], base: RowBasis) -> list[Vector]:
    """Candidates, in order, that are independent modulo ``base`` and the earlier picks."""
    eb = EchelonBuilder(base.ambient_dim, base.rows)
    picked = []
    for v in candidates:
        if eb.add(v):
            picked.append(as_vector(v))
    return picked


def is_subspace(X: RowBasis, Y: RowBasis) -> bool:
    return all(in_row_space(row, Y) for row in X.rows)

"""Lie algebras by structure constants, with exact bracket machinery.

An algebra of dimension n over Q or Q(i) is a dense n*n*n tensor C,
where C[i][j] is the coordinate vector of [e_i, e_j].  All operations
are pure functions on immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .linalg import (
    Matrix,
    Subspace,
    Vector,
    as_vector,
    basis_vector,
    coordinates_in,
    rank,
    vec_add,
    vec_is_zero,
    vec_scale,
    zero_vector,
)
from .scalars import FIELD_Q, FIELD_QI, Scalar

MAX_DIM = 32


class InvalidAlgebraError(ValueError):
    """Structure constants violate antisymmetry or the Jacobi identity."""


@dataclass(frozen=True)
class ValidationReport:
    """Every violated index tuple, 1-based; empty report means valid."""

    antisymmetry_violations: tuple[tuple[int, int, int], ...]
    jacobi_violations: tuple[tuple[int, int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.antisymmetry_violations and not self.jacobi_violations


class LieAlgebra:
    """Finite-dimensional Lie algebra presented by structure constants."""

    __slots__ = ("dim", "field", "table", "labels")

    def __init__(
        self,
        dim: int,
        brackets: dict[tuple[int, int], Sequence] | Sequence[Sequence[Sequence]],
        field: str = FIELD_Q,
        labels: Sequence[str] | None = None,
    ):
        if dim < 1 or dim > MAX_DIM:
            raise ValueError(f"dimension must be in 1..{MAX_DIM}")
        if field not in (FIELD_Q, FIELD_QI):
            raise ValueError(f"unknown field tag {field!r}")
        self.dim = dim
        self.field = field
        if isinstance(brackets, dict):
            table = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
            for (i, j), coeffs in brackets.items():
                v = as_vector(coeffs)
                if len(v) != dim:
                    raise ValueError(f"bracket [{i},{j}] has wrong length")
                table[i][j] = list(v)
                table[j][i] = [-c for c in v]
            self.table = tuple(tuple(tuple(cell) for cell in row) for row in table)
        else:
            self.table = tuple(
                tuple(as_vector(cell) for cell in row) for row in brackets
            )
            if len(self.table) != dim or any(
                len(row) != dim or any(len(cell) != dim for cell in row)
                for row in self.table
            ):
                raise ValueError("structure tensor must be dim x dim x dim")
        if field == FIELD_Q:
            for row in self.table:
                for cell in row:
                    for s in cell:
                        if not s.is_real():
                            raise ValueError("complex structure constant in a Q-algebra")
        self.labels = tuple(labels) if labels else tuple(f"e{i+1}" for i in range(dim))
        if len(self.labels) != dim:
            raise ValueError("label count does not match dimension")

    def label_index(self, name: str) -> int:
        return self.labels.index(name)

    def basis_by_label(self, name: str) -> Vector:
        return basis_vector(self.dim, self.label_index(name))

    def __eq__(self, other: object) -> bool:
        # labels are cosmetic; equality is dimension + field + tensor
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return (
            self.dim == other.dim
            and self.field == other.field
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash((self.dim, self.field, self.table))

    def __repr__(self) -> str:
        return f"LieAlgebra(dim={self.dim}, field={self.field})"


def bracket(alg: LieAlgebra, x: Sequence, y: Sequence) -> Vector:
    """[x, y] by tensor contraction; bilinear and antisymmetric."""
    x = _check_vector(alg, x)
    y = _check_vector(alg, y)
    n = alg.dim
    out = list(zero_vector(n))
    for i in range(n):
        if x[i].is_zero():
            continue
        row = alg.table[i]
        for j in range(n):
            if y[j].is_zero():
                continue
            c = x[i] * y[j]
            cell = row[j]
            for k in range(n):
                if not cell[k].is_zero():
                    out[k] = out[k] + c * cell[k]
    return tuple(out)


def _check_vector(alg: LieAlgebra, v: Sequence) -> Vector:
    v = as_vector(v)
    if len(v) != alg.dim:
        raise ValueError(f"vector length {len(v)} does not match dim {alg.dim}")
    if alg.field == FIELD_Q and any(not s.is_real() for s in v):
        raise ValueError("complex coordinates in a Q-algebra")
    return v


def validate(alg: LieAlgebra) -> ValidationReport:
    """Check antisymmetry and Jacobi on all index tuples (1-based report)."""
    n = alg.dim
    anti = []
    for i in range(n):
        for j in range(i, n):
            for k in range(n):
                if alg.table[i][j][k] != -alg.table[j][i][k]:
                    anti.append((i + 1, j + 1, k + 1))
    jacobi = []
    ei = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = vec_add(
                    bracket(alg, bracket(alg, ei[i], ei[j]), ei[k]),
                    vec_add(
                        bracket(alg, bracket(alg, ei[j], ei[k]), ei[i]),
                        bracket(alg, bracket(alg, ei[k], ei[i]), ei[j]),
                    ),
                )
                for l in range(n):
                    if not s[l].is_zero():
                        jacobi.append((i + 1, j + 1, k + 1, l + 1))
    return ValidationReport(tuple(anti), tuple(jacobi))


def adjoint(alg: LieAlgebra, x: Sequence) -> Matrix:
    """ad x as a matrix: column j is [x, e_j]."""
    x = _check_vector(alg, x)
    cols = [bracket(alg, x, basis_vector(alg.dim, j)) for j in range(alg.dim)]
    return Matrix.from_columns(cols)


def change_basis(alg: LieAlgebra, P: Matrix) -> LieAlgebra:
    """Structure constants in the basis e'_i = P e_i."""
    if P.nrows != alg.dim or P.ncols != alg.dim:
        raise ValueError("basis-change matrix has wrong shape")
    Pinv = P.inverse()
    n = alg.dim
    new_cols = [
        [
            Pinv.apply(bracket(alg, P.column(i), P.column(j)))
            for j in range(n)
        ]
        for i in range(n)
    ]
    return LieAlgebra(n, new_cols, field=alg.field, labels=alg.labels)


def bracket_span(alg: LieAlgebra, S: Subspace, T: Subspace) -> Subspace:
    """Span of all [s, t] with s in S, t in T."""
    vecs = [bracket(alg, s, t) for s in S.basis for t in T.basis]
    return Subspace(alg.dim, vecs)


def is_subalgebra(alg: LieAlgebra, S: Subspace) -> bool:
    if S.ambient_dim != alg.dim:
        raise ValueError("subspace lives in a different ambient space")
    return all(
        S.contains(bracket(alg, u, v)) for u in S.basis for v in S.basis
    )


def is_ideal(alg: LieAlgebra, S: Subspace) -> bool:
    if S.ambient_dim != alg.dim:
        raise ValueError("subspace lives in a different ambient space")
    return all(
        S.contains(bracket(alg, basis_vector(alg.dim, i), v))
        for i in range(alg.dim)
        for v in S.basis
    )


def direct_sum(a: LieAlgebra, b: LieAlgebra) -> LieAlgebra:
    """Block-diagonal sum; both summands become ideals."""
    if a.field != b.field:
        raise ValueError("direct sum requires matching field tags")
    n, m = a.dim, b.dim
    brackets: dict[tuple[int, int], Vector] = {}
    for i in range(n):
        for j in range(i + 1, n):
            if not vec_is_zero(a.table[i][j]):
                brackets[(i, j)] = a.table[i][j] + zero_vector(m)
    for i in range(m):
        for j in range(i + 1, m):
            if not vec_is_zero(b.table[i][j]):
                brackets[(n + i, n + j)] = zero_vector(n) + b.table[i][j]
    labels = list(a.labels)
    for lab in b.labels:
        while lab in labels:
            lab = lab + "'"
        labels.append(lab)
    return LieAlgebra(n + m, brackets, field=a.field, labels=labels)


def subalgebra_constants(alg: LieAlgebra, basis: Sequence[Sequence]) -> LieAlgebra:
    """Induced algebra on a subalgebra, in the given (ordered) basis.

    Raises if the basis is dependent or some bracket leaves the span.
    """
    vecs = [_check_vector(alg, v) for v in basis]
    k = len(vecs)
    if rank(vecs) != k:
        raise ValueError("basis vectors are dependent")
    brackets: dict[tuple[int, int], Vector] = {}
    for i in range(k):
        for j in range(i + 1, k):
            w = bracket(alg, vecs[i], vecs[j])
            coords = coordinates_in(vecs, w)
            if coords is None:
                raise ValueError(f"bracket of basis vectors {i+1},{j+1} leaves the span")
            brackets[(i, j)] = coords
    return LieAlgebra(k, brackets, field=alg.field)


class BilinearMap:
    """Vector-valued bilinear map on the algebra, tabulated on basis pairs."""

    __slots__ = ("dim", "table")

    def __init__(self, dim: int, table: Sequence[Sequence[Sequence]]):
        self.dim = dim
        self.table = tuple(tuple(as_vector(cell) for cell in row) for row in table)

    @staticmethod
    def zero(dim: int) -> "BilinearMap":
        z = zero_vector(dim)
        return BilinearMap(dim, [[z for _ in range(dim)] for _ in range(dim)])

    def value(self, i: int, j: int) -> Vector:
        return self.table[i][j]

    def evaluate(self, x: Sequence, y: Sequence) -> Vector:
        x, y = as_vector(x), as_vector(y)
        out = list(zero_vector(self.dim))
        for i in range(self.dim):
            if x[i].is_zero():
                continue
            for j in range(self.dim):
                if y[j].is_zero():
                    continue
                out = list(vec_add(tuple(out), vec_scale(x[i] * y[j], self.table[i][j])))
        return tuple(out)

    def is_zero(self) -> bool:
        return all(vec_is_zero(cell) for row in self.table for cell in row)

    def is_antisymmetric(self) -> bool:
        return all(
            self.table[i][j] == vec_scale(Scalar(-1), self.table[j][i])
            for i in range(self.dim)
            for j in range(i, self.dim)
        )

    def nonzero_pairs(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(self.dim)
            for j in range(self.dim)
            if not vec_is_zero(self.table[i][j])
        ]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BilinearMap):
            return NotImplemented
        return self.dim == other.dim and self.table == other.table

    def __hash__(self) -> int:
        return hash((self.dim, self.table))


def bracket_map(alg: LieAlgebra) -> BilinearMap:
    """The algebra's own bracket as a BilinearMap."""
    return BilinearMap(alg.dim, alg.table)

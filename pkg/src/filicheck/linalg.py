"""Exact linear algebra over Q and Q(i).

Gaussian elimination with first-nonzero pivots, so every rank, kernel
and membership decision is deterministic and field-independent.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import Scalar

Vector = tuple[Scalar, ...]


def as_vector(entries: Sequence) -> Vector:
    return tuple(Scalar.coerce(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return tuple(Scalar(0) for _ in range(n))


def basis_vector(n: int, i: int) -> Vector:
    return tuple(Scalar(1 if j == i else 0) for j in range(n))


def vec_add(x: Vector, y: Vector) -> Vector:
    return tuple(a + b for a, b in zip(x, y))

def vec_sub(x: Vector, y: Vector) -> Vector:
    return tuple(a - b for a, b in zip(x, y))

def vec_scale(c: Scalar, x: Vector) -> Vector:
    return tuple(c * a for a in x)

def vec_is_zero(x: Vector) -> bool:
    return all(a.is_zero() for a in x)

def vec_conjugate(x: Vector) -> Vector:
    return tuple(a.conjugate() for a in x)


def rref(rows: Sequence[Vector]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    mat = [list(r) for r in rows if not vec_is_zero(r)]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if not mat[i][c].is_zero():
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        inv = Scalar(1) / mat[r][c]
        mat[r] = [inv * v for v in mat[r]]
        for i in range(len(mat)):
            if i != r and not mat[i][c].is_zero():
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    out = [tuple(row) for row in mat[:r]]
    return out, pivots


def rank(rows: Sequence[Vector]) -> int:
    return len(rref(rows)[0])


class Matrix:
    """Square or rectangular matrix of exact scalars; rows immutable."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Sequence]):
        self.rows: tuple[Vector, ...] = tuple(as_vector(r) for r in rows)
        if self.rows:
            w = len(self.rows[0])
            if any(len(r) != w for r in self.rows):
                raise ValueError("ragged matrix")

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix([basis_vector(n, i) for i in range(n)])

    @staticmethod
    def zero(n: int, m: int | None = None) -> "Matrix":
        m = n if m is None else m
        return Matrix([zero_vector(m) for _ in range(n)])

    @staticmethod
    def from_columns(cols: Sequence[Vector]) -> "Matrix":
        n = len(cols[0])
        return Matrix([[cols[j][i] for j in range(len(cols))] for i in range(n)])

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, idx: tuple[int, int]) -> Scalar:
        return self.rows[idx[0]][idx[1]]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix([self.column(j) for j in range(self.ncols)])

    def apply(self, v: Sequence) -> Vector:
        v = as_vector(v)
        if len(v) != self.ncols:
            raise ValueError(f"matrix is {self.nrows}x{self.ncols}, vector has length {len(v)}")
        return tuple(
            sum((row[j] * v[j] for j in range(self.ncols)), Scalar(0))
            for row in self.rows
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ncols != other.nrows:
            raise ValueError("matrix dimensions do not compose")
        cols = other.transpose().rows
        return Matrix(
            [
                [sum((row[k] * col[k] for k in range(self.ncols)), Scalar(0)) for col in cols]
                for row in self.rows
            ]
        )

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix([vec_add(a, b) for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix([vec_sub(a, b) for a, b in zip(self.rows, other.rows)])

    def __neg__(self) -> "Matrix":
        return Matrix([vec_scale(Scalar(-1), r) for r in self.rows])

    def scale(self, c) -> "Matrix":
        c = Scalar.coerce(c)
        return Matrix([vec_scale(c, r) for r in self.rows])

    def __pow__(self, k: int) -> "Matrix":
        if not self.is_square():
            raise ValueError("power of a non-square matrix")
        out = Matrix.identity(self.nrows)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(vec_is_zero(r) for r in self.rows)

    def rank(self) -> int:
        return rank(self.rows)

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise ValueError("inverse of a non-square matrix")
        n = self.nrows
        aug = [tuple(self.rows[i]) + basis_vector(n, i) for i in range(n)]
        red, piv = rref(aug)
        if piv[:n] != list(range(n)):
            raise ValueError("singular matrix")
        return Matrix([r[n:] for r in red])

    def nullspace(self) -> list[Vector]:
        """Basis of the right kernel, one vector per free column."""
        red, piv = rref(self.rows)
        n = self.ncols
        free = [c for c in range(n) if c not in piv]
        basis = []
        for fc in free:
            v = [Scalar(0)] * n
            v[fc] = Scalar(1)
            for r, pc in enumerate(piv):
                v[pc] = -red[r][fc]
            basis.append(tuple(v))
        return basis

    def solve(self, b: Sequence) -> Vector | None:
        """One exact solution of ``self @ x = b``, or None if inconsistent."""
        b = as_vector(b)
        aug = [tuple(self.rows[i]) + (b[i],) for i in range(self.nrows)]
        red, piv = rref(aug)
        n = self.ncols
        if n in piv:
            return None
        x = [Scalar(0)] * n
        for r, pc in enumerate(piv):
            x[pc] = red[r][n]
        return tuple(x)

    def conjugate(self) -> "Matrix":
        return Matrix([vec_conjugate(r) for r in self.rows])

    def is_real(self) -> bool:
        return all(s.is_real() for r in self.rows for s in r)

    def to_float(self):
        return [[complex(x).real if x.is_real() else complex(x) for x in r] for r in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix[{body}]"


class Subspace:
    """Subspace of an ambient coordinate space, stored in reduced echelon form."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence]):
        vecs = [as_vector(v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector length does not match ambient dimension")
        self.ambient_dim = ambient_dim
        self.basis, _ = rref(vecs)
        self.basis = tuple(self.basis)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        v = as_vector(v)
        if vec_is_zero(v):
            return True
        return rank(list(self.basis) + [v]) == self.dim

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient_dim, list(self.basis) + list(other.basis))

    def is_complement_of(self, other: "Subspace") -> bool:
        """True iff self ⊕ other is the whole ambient space."""
        return (
            self.dim + other.dim == self.ambient_dim
            and self.sum(other).dim == self.ambient_dim
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def span(ambient_dim: int, vectors: Sequence[Sequence]) -> Subspace:
    return Subspace(ambient_dim, vectors)


def coordinates_in(basis: Sequence[Vector], v: Vector) -> Vector | None:
    """Coordinates of v in the given (independent) basis, or None if outside."""
    if not basis:
        return () if vec_is_zero(v) else None
    mat = Matrix.from_columns(list(basis))
    return mat.solve(v)

"""Complexification, conjugation and eigenspace decompositions.

The complexification keeps the real basis, so the conjugation is
literal componentwise conjugation of coordinates, and complex
subspaces are spans of coordinate vectors over Q(i).
"""

from __future__ import annotations

from typing import Sequence

from .algebra import LieAlgebra, bracket, bracket_span, is_ideal, is_subalgebra
from .linalg import Matrix, Subspace, Vector, as_vector, vec_conjugate, vec_is_zero
from .scalars import FIELD_Q, FIELD_QI, Scalar


def complexify(alg: LieAlgebra) -> LieAlgebra:
    """Scalar extension Q -> Q(i); same structure tensor, same basis."""
    if alg.field == FIELD_QI:
        raise ValueError("algebra is already complex")
    return LieAlgebra(alg.dim, alg.table, field=FIELD_QI, labels=alg.labels)


def sigma(v: Sequence) -> Vector:
    """Conjugation fixing the real basis: componentwise conjugate."""
    return vec_conjugate(as_vector(v))


def sigma_subspace(S: Subspace) -> Subspace:
    return Subspace(S.ambient_dim, [sigma(v) for v in S.basis])


def eigenspace_split(alg_c: LieAlgebra, J: Matrix) -> tuple[Subspace, Subspace]:
    """Kernels of J -/+ i among the complexified space: (h, hbar)."""
    if alg_c.field != FIELD_QI:
        raise ValueError("eigenspace split needs a complexified algebra")
    n = alg_c.dim
    if J.nrows != n or J.ncols != n:
        raise ValueError("endomorphism has wrong shape")
    if (J * J) != Matrix.identity(n).scale(-1):
        raise ValueError("J^2 is not -Id")
    i_id = Matrix.identity(n).scale(Scalar(0, 1))
    h = Subspace(n, (J - i_id).nullspace())
    hbar = Subspace(n, (J + i_id).nullspace())
    return h, hbar


def check_subalgebra_decomposition(alg_c: LieAlgebra, h: Subspace) -> bool:
    """h a half-dimensional subalgebra with h + sigma(h) everything."""
    if alg_c.field != FIELD_QI:
        raise ValueError("decomposition checks run on the complexification")
    if h.ambient_dim != alg_c.dim:
        raise ValueError("subspace lives in a different ambient space")
    n2 = alg_c.dim
    if n2 % 2 != 0 or h.dim != n2 // 2:
        return False
    if not is_subalgebra(alg_c, h):
        return False
    return h.sum(sigma_subspace(h)).dim == n2


def check_ideal_decomposition(alg_c: LieAlgebra, ideal: Subspace) -> bool:
    """ideal and sigma(ideal) both ideals summing to everything; brackets across vanish."""
    if alg_c.field != FIELD_QI:
        raise ValueError("decomposition checks run on the complexification")
    if ideal.ambient_dim != alg_c.dim:
        raise ValueError("subspace lives in a different ambient space")
    n2 = alg_c.dim
    if n2 % 2 != 0 or ideal.dim != n2 // 2:
        return False
    conj = sigma_subspace(ideal)
    if ideal.sum(conj).dim != n2:
        return False
    if not (is_ideal(alg_c, ideal) and is_ideal(alg_c, conj)):
        return False
    # implied by the ideal property on complementary ideals; checked anyway
    return bracket_span(alg_c, ideal, conj).dim == 0


def z2_grading_check(alg: LieAlgebra, g0: Subspace, g1: Subspace) -> bool:
    """[g0,g0] in g0, [g1,g1] in g0, [g0,g1] in g1 for a splitting g0 + g1 = g."""
    if g0.ambient_dim != alg.dim or g1.ambient_dim != alg.dim:
        raise ValueError("subspace lives in a different ambient space")
    if not g0.is_complement_of(g1):
        raise ValueError("g0 and g1 do not form a direct sum decomposition")
    return (
        g0.contains_subspace(bracket_span(alg, g0, g0))
        and g0.contains_subspace(bracket_span(alg, g1, g1))
        and g1.contains_subspace(bracket_span(alg, g0, g1))
    )

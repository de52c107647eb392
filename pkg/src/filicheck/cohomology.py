"""Degree-1 Chevalley coboundary and the transported-bracket identity.

Sign convention: (dT)(x,y) = [Tx,y] + [x,Ty] - T[x,y], so dT = 0
exactly characterizes derivations, and for an invariant complex
structure J the coboundary dJ coincides with the transported law
mu_J(x,y) = J^{-1}[Jx, Jy].
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import BilinearMap, LieAlgebra, bracket
from .linalg import Matrix, basis_vector, vec_add, vec_sub
from .structures import is_invariant_cs, squares_to_minus_id

TwoCochain = BilinearMap


class PreconditionError(ValueError):
    """The identity is only claimed for invariant complex structures."""


def coboundary1(alg: LieAlgebra, T: Matrix) -> TwoCochain:
    """(dT)(e_i, e_j) = [Te_i, e_j] + [e_i, Te_j] - T[e_i, e_j]."""
    n = alg.dim
    if T.nrows != n or T.ncols != n:
        raise ValueError("endomorphism has wrong shape")
    cols = [T.column(i) for i in range(n)]
    ei = [basis_vector(n, i) for i in range(n)]
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(
                vec_sub(
                    vec_add(
                        bracket(alg, cols[i], ei[j]),
                        bracket(alg, ei[i], cols[j]),
                    ),
                    T.apply(alg.table[i][j]),
                )
            )
        table.append(row)
    return BilinearMap(n, table)


def transported_law(alg: LieAlgebra, J: Matrix) -> TwoCochain:
    """mu_J(e_i, e_j) = J^{-1} [J e_i, J e_j]; uses J^{-1} = -J when J^2 = -Id."""
    n = alg.dim
    if J.nrows != n or J.ncols != n:
        raise ValueError("endomorphism has wrong shape")
    if squares_to_minus_id(n, J):
        jinv = -J
    else:
        jinv = J.inverse()
    cols = [J.column(i) for i in range(n)]
    table = [
        [jinv.apply(bracket(alg, cols[i], cols[j])) for j in range(n)]
        for i in range(n)
    ]
    return BilinearMap(n, table)


def is_lie_law(law: BilinearMap) -> bool:
    """Antisymmetry plus the Jacobi identity for a tabulated bilinear map."""
    if not law.is_antisymmetric():
        return False
    n = law.dim
    ei = [basis_vector(n, i) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = vec_add(
                    law.evaluate(law.value(i, j), ei[k]),
                    vec_add(
                        law.evaluate(law.value(j, k), ei[i]),
                        law.evaluate(law.value(k, i), ei[j]),
                    ),
                )
                if any(not c.is_zero() for c in s):
                    return False
    return True


def verify_coboundary_identity(alg: LieAlgebra, J: Matrix) -> bool:
    """dJ = mu_J, claimed (and checked) for invariant complex structures."""
    if not squares_to_minus_id(alg.dim, J):
        raise PreconditionError("J^2 = -Id fails")
    if not is_invariant_cs(alg, J):
        raise PreconditionError("J is not an invariant complex structure")
    return coboundary1(alg, J) == transported_law(alg, J)


@dataclass(frozen=True)
class CandidateScan:
    """Per-candidate outcome of the coboundary identity scan."""

    squares_ok: bool
    identity_holds: bool
    law_is_lie: bool

    @property
    def satisfies_both(self) -> bool:
        return self.squares_ok and self.identity_holds and self.law_is_lie


def corollary2_scan(alg: LieAlgebra, candidates: list[Matrix]) -> list[CandidateScan]:
    """On a filiform algebra, no candidate with J^2 = -Id can satisfy
    dJ = mu_J with mu_J a Lie law: such a J would be an invariant
    complex structure, which filiform algebras do not admit."""
    from .nilpotent import is_filiform
    from .structures import ContradictionError

    if not is_filiform(alg):
        raise ValueError("the scan runs on filiform algebras")
    results = []
    for J in candidates:
        squares_ok = squares_to_minus_id(alg.dim, J)
        if not squares_ok:
            results.append(CandidateScan(False, False, False))
            continue
        law = transported_law(alg, J)
        scan = CandidateScan(True, coboundary1(alg, J) == law, is_lie_law(law))
        if scan.satisfies_both:
            raise ContradictionError(
                "candidate satisfies the coboundary identity on a filiform algebra"
            )
        results.append(scan)
    return results

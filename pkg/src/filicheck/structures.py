"""Invariant and bi-invariant complex structures: exact checkers,
obstructions, and the commutant-based existence solver.

Exactness discipline: Exists verdicts always carry a witness that
re-verifies under the exact checker that defines the property, and
NotExists verdicts always name a machine-checkable certificate.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional, Sequence

from .algebra import BilinearMap, LieAlgebra, adjoint, bracket, is_subalgebra, subalgebra_constants
from .linalg import Matrix, Subspace, basis_vector, vec_sub, zero_vector
from .nilpotent import (
    characteristic_sequence,
    is_filiform,
    lower_central_series,
    pairing_pattern_holds,
)
from .polysolve import EMPTY, WITNESS, solve_square_root_of_minus_identity
from .scalars import FIELD_Q, FIELD_QI, Scalar

DEFAULT_SEED = 2024

RANDOM_PROBES = 60
ELIMINATION_MAX_PARAMS = 20


class Status(Enum):
    EXISTS = "exists"
    NOT_EXISTS = "not_exists"
    UNKNOWN = "unknown"


class CertificateKind(Enum):
    FILIFORM_THEOREM = "filiform_theorem"
    PAIRING_OBSTRUCTION = "pairing_obstruction"
    COMMUTANT_EXHAUSTED = "commutant_exhausted"
    EXPLICIT_WITNESS = "explicit_witness"
    RESIDUAL_FLOOR = "residual_floor"


class ContradictionError(RuntimeError):
    """A computation contradicted a proved nonexistence statement."""


@dataclass(frozen=True)
class Verdict:
    status: Status
    certificate: Optional[CertificateKind] = None
    witness: Optional[Matrix] = None
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status is Status.EXISTS and self.witness is None:
            raise ValueError("Exists verdict requires a witness")


def nijenhuis_residual(alg: LieAlgebra, J: Matrix) -> BilinearMap:
    """[Je_i,Je_j] - [e_i,e_j] - J[Je_i,e_j] - J[e_i,Je_j] on all basis pairs."""
    n = alg.dim
    if J.nrows != n or J.ncols != n:
        raise ValueError("endomorphism has wrong shape")
    jcols = [J.column(i) for i in range(n)]
    ei = [basis_vector(n, i) for i in range(n)]
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            val = vec_sub(
                vec_sub(bracket(alg, jcols[i], jcols[j]), alg.table[i][j]),
                J.apply(
                    tuple(
                        a + b
                        for a, b in zip(
                            bracket(alg, jcols[i], ei[j]),
                            bracket(alg, ei[i], jcols[j]),
                        )
                    )
                ),
            )
            row.append(val)
        table.append(row)
    return BilinearMap(n, table)


def _check_even(alg: LieAlgebra):
    if alg.dim % 2 != 0:
        raise ValueError(f"even dimension required, got {alg.dim}")


def squares_to_minus_id(alg_dim: int, J: Matrix) -> bool:
    return (J * J) == Matrix.identity(alg_dim).scale(-1)


def is_invariant_cs(alg: LieAlgebra, J: Matrix) -> bool:
    """J^2 = -Id and vanishing Nijenhuis residual, both exact."""
    _check_even(alg)
    if not squares_to_minus_id(alg.dim, J):
        return False
    return nijenhuis_residual(alg, J).is_zero()


def is_bi_invariant_cs(alg: LieAlgebra, J: Matrix) -> bool:
    """J^2 = -Id and J commutes with every adjoint operator."""
    _check_even(alg)
    if not squares_to_minus_id(alg.dim, J):
        return False
    for i in range(alg.dim):
        ad = adjoint(alg, basis_vector(alg.dim, i))
        if J * ad != ad * J:
            return False
    return True


def commutant(alg: LieAlgebra) -> list[Matrix]:
    """Basis of {T : T ad(e_i) = ad(e_i) T for all i} over the algebra's field."""
    n = alg.dim
    ads = [adjoint(alg, basis_vector(n, i)) for i in range(n)]
    rows = []
    zero = Scalar(0)
    for A in ads:
        for r in range(n):
            for s in range(n):
                row = [zero] * (n * n)
                # entry (r,s) of T A - A T, coefficient of unknown T[a][b]
                for b in range(n):
                    row[r * n + b] = row[r * n + b] + A[b, s]
                for a in range(n):
                    row[a * n + s] = row[a * n + s] - A[r, a]
                if any(not x.is_zero() for x in row):
                    rows.append(tuple(row))
    if not rows:
        # every matrix commutes (abelian algebra)
        return [
            Matrix([[Scalar(1 if (i, j) == (a, b) else 0) for j in range(n)] for i in range(n)])
            for a in range(n)
            for b in range(n)
        ]
    kernel = Matrix(rows).nullspace()
    return [
        Matrix([[v[i * n + j] for j in range(n)] for i in range(n)])
        for v in kernel
    ]


def bi_invariant_pairing_obstruction(alg: LieAlgebra) -> Verdict:
    """Necessary condition: the characteristic sequence pairs up."""
    seq, _ = characteristic_sequence(alg)  # raises on non-nilpotent input
    evidence = {"characteristic_sequence": seq}
    if not pairing_pattern_holds(seq):
        return Verdict(Status.NOT_EXISTS, CertificateKind.PAIRING_OBSTRUCTION, evidence=evidence)
    return Verdict(Status.UNKNOWN, evidence=evidence)


def filiform_obstruction(alg: LieAlgebra) -> Verdict:
    """Maximal-class algebras admit no invariant (hence no bi-invariant) structure."""
    _check_even(alg)
    if is_filiform(alg):
        return Verdict(Status.NOT_EXISTS, CertificateKind.FILIFORM_THEOREM)
    return Verdict(Status.UNKNOWN)


def _structured_candidates(alg: LieAlgebra) -> list[Matrix]:
    """Deterministic rotation-like candidates with J^2 = -Id by construction."""
    n = alg.dim
    candidates = []

    def rotation(pairs: list[tuple[int, int]]) -> Matrix:
        cols = [list(zero_vector(n)) for _ in range(n)]
        for a, b in pairs:
            cols[a][b] = Scalar(1)
            cols[b][a] = Scalar(-1)
        return Matrix.from_columns([tuple(c) for c in cols])

    # pair X<tag> with Y<tag> when the labels split that way
    xs = {m.group(1): i for i, lab in enumerate(alg.labels) if (m := re.fullmatch(r"X(\w+)", lab))}
    ys = {m.group(1): i for i, lab in enumerate(alg.labels) if (m := re.fullmatch(r"Y(\w+)", lab))}
    if xs and set(xs) == set(ys) and len(xs) + len(ys) == n:
        candidates.append(rotation([(xs[t], ys[t]) for t in sorted(xs)]))
    half = n // 2
    candidates.append(rotation([(k, k + half) for k in range(half)]))
    candidates.append(rotation([(2 * k, 2 * k + 1) for k in range(half)]))
    return candidates


def _random_probes(basis_maps: list[Matrix], n: int, seed: int, count: int):
    rng = random.Random(seed)
    for _ in range(count):
        coeffs = [Fraction(rng.randint(-2, 2), rng.choice([1, 1, 2])) for _ in basis_maps]
        J = Matrix.zero(n)
        for c, B in zip(coeffs, basis_maps):
            if c:
                J = J + B.scale(c)
        yield J


def _elimination(alg: LieAlgebra, basis_maps: list[Matrix], max_nodes: int) -> Verdict | None:
    """Decide J^2 = -Id over the commutant span by exact elimination."""
    n = alg.dim
    m = len(basis_maps)
    if m > ELIMINATION_MAX_PARAMS:
        return None
    products = []
    for k in range(m):
        row = []
        for l in range(m):
            prod = basis_maps[k] * basis_maps[l]
            row.append([[prod[i, j].re for j in range(n)] for i in range(n)])
        products.append(row)
    identity_entries = [
        [Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)
    ]
    status, tvals = solve_square_root_of_minus_identity(products, identity_entries, max_nodes)
    if status == WITNESS and tvals is not None:
        J = Matrix.zero(n)
        for c, B in zip(tvals, basis_maps):
            J = J + B.scale(c)
        if is_bi_invariant_cs(alg, J):
            return Verdict(Status.EXISTS, CertificateKind.EXPLICIT_WITNESS, witness=J)
        return None
    if status == EMPTY:
        return Verdict(Status.NOT_EXISTS, CertificateKind.COMMUTANT_EXHAUSTED,
                       evidence={"commutant_dim": m})
    return None


def solve_bi_invariant(alg: LieAlgebra, seed: int = DEFAULT_SEED) -> Verdict:
    """Decide existence of a bi-invariant complex structure.

    Obstructions run first on nilpotent inputs; then the commutant is
    searched, by elimination when the parameter count is small and by
    exactly-verified probes otherwise.  Elimination is also attempted
    as a fallback so that emptiness proofs (e.g. forced alpha^2 = -1
    on a real diagonal) are found at any commutant dimension.
    """
    _check_even(alg)
    if alg.field != FIELD_Q:
        raise ValueError("bi-invariant search runs on real (field Q) algebras")
    if lower_central_series(alg).reaches_zero:
        verdict = bi_invariant_pairing_obstruction(alg)
        if verdict.status is Status.NOT_EXISTS:
            return verdict
        verdict = filiform_obstruction(alg)
        if verdict.status is Status.NOT_EXISTS:
            return verdict
    basis_maps = commutant(alg)
    m = len(basis_maps)

    if m <= 6:
        verdict = _elimination(alg, basis_maps, max_nodes=800)
        if verdict is not None:
            return verdict

    ads = [adjoint(alg, basis_vector(alg.dim, i)) for i in range(alg.dim)]
    minus_id = Matrix.identity(alg.dim).scale(-1)

    def verifies(J: Matrix) -> bool:
        return (J * J) == minus_id and all(J * ad == ad * J for ad in ads)

    probe_count = 0
    for J in _probe_candidates(alg, basis_maps, seed):
        probe_count += 1
        if verifies(J):
            assert is_bi_invariant_cs(alg, J)
            return Verdict(Status.EXISTS, CertificateKind.EXPLICIT_WITNESS, witness=J)

    if m > 6:
        verdict = _elimination(alg, basis_maps, max_nodes=2000)
        if verdict is not None:
            return verdict
    return Verdict(Status.UNKNOWN, evidence={"commutant_dim": m, "probes": probe_count})


def _probe_candidates(alg: LieAlgebra, basis_maps: list[Matrix], seed: int):
    yield from _structured_candidates(alg)
    yield from _random_probes(basis_maps, alg.dim, seed, RANDOM_PROBES)


@dataclass(frozen=True)
class SplitReport:
    """Outcome of testing a candidate splitting of a filiform algebra."""

    direct_sum: bool
    first_subalgebra: bool
    second_subalgebra: bool
    first_filiform: bool
    second_filiform: bool

    @property
    def conjunction(self) -> bool:
        return (
            self.direct_sum
            and self.first_subalgebra
            and self.second_subalgebra
            and self.first_filiform
            and self.second_filiform
        )


def filiform_split_check(alg_c: LieAlgebra, g1: Subspace, g2: Subspace) -> SplitReport:
    """Report whether g1 + g2 splits the filiform algebra into two
    filiform half-dimensional subalgebras.  The conjunction is provably
    impossible; finding it true raises ContradictionError."""
    if alg_c.field != FIELD_QI:
        raise ValueError("split check runs on a complexified algebra")
    if not is_filiform(alg_c):
        raise ValueError("split check requires a filiform input")
    if g1.ambient_dim != alg_c.dim or g2.ambient_dim != alg_c.dim:
        raise ValueError("subspace lives in a different ambient space")
    direct = g1.is_complement_of(g2) and g1.dim == g2.dim == alg_c.dim // 2
    sub1 = is_subalgebra(alg_c, g1)
    sub2 = is_subalgebra(alg_c, g2)
    fil1 = bool(sub1 and g1.dim >= 3 and is_filiform(subalgebra_constants(alg_c, g1.basis)))
    fil2 = bool(sub2 and g2.dim >= 3 and is_filiform(subalgebra_constants(alg_c, g2.basis)))
    report = SplitReport(direct, sub1, sub2, fil1, fil2)
    if report.conjunction:
        raise ContradictionError(
            "filiform algebra split into two filiform halves; "
            "this contradicts the nonexistence certificate"
        )
    return report

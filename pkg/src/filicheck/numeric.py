"""Floating-point search for invariant complex structures.

Minimizes the squared Frobenius residual of J^2 + Id together with the
Nijenhuis tensor by a batched Levenberg-Marquardt iteration from seeded
random starts.  The search runs inside a fixed coordinate box: outside
a compact domain the residual of a filiform algebra can be pushed
arbitrarily close to zero along diverging conjugations, so an
unbounded "residual floor" would be an artifact of the iteration
budget rather than a property of the algebra.

Numeric evidence never decides anything by itself: a candidate below
tolerance is rationalized (continued fractions, denominators <= 64)
and must re-verify under the exact checker before Exists is reported;
otherwise the best residual is returned as a floor.
"""

from __future__ import annotations

import math

import numpy as np
from scipy.optimize import least_squares

from .algebra import LieAlgebra
from .linalg import Matrix
from .scalars import rationalize
from .structures import CertificateKind, Status, Verdict, is_invariant_cs

DEFAULT_TOL = 1e-9
DENOMINATOR_BOUND = 64
SEARCH_BOX = 10.0
LM_ITERATIONS = 120
_ROUND_LADDER = (1, 2, 3, 4, 6, 8, 12, 16, 24, 32, 48, 64)
_CERTIFY_ATTEMPTS = 8
_SQRT2 = math.sqrt(2.0)


def _structure_tensor(alg: LieAlgebra) -> np.ndarray:
    n = alg.dim
    C = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                s = alg.table[i][j][k]
                if not s.is_real():
                    raise ValueError("numeric search needs real structure constants")
                C[i, j, k] = float(s.re)
    return C


def _pair_rows(n: int) -> np.ndarray:
    """Flat (i*n+j)*n+k indices of the i<j slice of an n^3 tensor."""
    rows = [
        (i * n + j) * n + k
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(n)
    ]
    return np.array(rows, dtype=np.intp)


def _residual_batch(J: np.ndarray, C: np.ndarray, pair_rows: np.ndarray) -> np.ndarray:
    """Entries of J^2+Id and sqrt(2) * Nijenhuis entries over pairs i<j.

    The Nijenhuis tensor is antisymmetric, so its squared Frobenius norm
    equals twice the sum over unordered pairs; the sqrt(2) weight keeps
    the summed square identical to the full-tensor value.
    """
    b, n, _ = J.shape
    sq = J @ J + np.eye(n)
    t1 = np.einsum("bpi,bqj,pqk->bijk", J, J, C, optimize=True)
    t2 = np.einsum("bkm,bpi,pjm->bijk", J, J, C, optimize=True)
    t3 = np.einsum("bkm,bqj,iqm->bijk", J, J, C, optimize=True)
    nij = (t1 - C - t2 - t3).reshape(b, -1)[:, pair_rows]
    return np.concatenate([sq.reshape(b, -1), _SQRT2 * nij], axis=1)


def _jacobian_batch(J: np.ndarray, C: np.ndarray, pair_rows: np.ndarray) -> np.ndarray:
    """d(residual)/dJ, assembled by scatter to avoid large dense einsums."""
    b, n, _ = J.shape
    # J^2 + Id part: d/dJ[r,s] of (JJ)[i,j] = delta_ir J[s,j] + J[i,r] delta_js
    d_sq = np.zeros((b, n, n, n, n))
    Jt = J.transpose(0, 2, 1)
    for i in range(n):
        d_sq[:, i, :, i, :] += Jt
    for j in range(n):
        d_sq[:, :, j, :, j] += J

    # Nijenhuis part, decomposed into Kronecker-delta slices
    m1 = np.einsum("bqj,rqk->bjkr", J, C, optimize=True)
    m2 = np.einsum("bpi,prk->bikr", J, C, optimize=True)
    m3 = np.einsum("bpi,pjs->bijs", J, C, optimize=True)
    m4 = np.einsum("bkm,rjm->bkjr", J, C, optimize=True)
    m5 = np.einsum("bqj,iqs->bijs", J, C, optimize=True)
    m6 = np.einsum("bkm,irm->bkir", J, C, optimize=True)
    a1 = m1 - m4.transpose(0, 2, 1, 3)   # [b, j, k, r], lives at s = i
    a2 = m2 - m6.transpose(0, 2, 1, 3)   # [b, i, k, r], lives at s = j
    a3 = m3 + m5                         # [b, i, j, s], lives at r = k
    d_nij = np.zeros((b, n, n, n, n, n))
    for i in range(n):
        d_nij[:, i, :, :, :, i] += a1
    for j in range(n):
        d_nij[:, :, j, :, :, j] += a2
    for k in range(n):
        d_nij[:, :, :, k, k, :] -= a3

    top = d_sq.reshape(b, n * n, n * n)
    bottom = _SQRT2 * d_nij.reshape(b, n * n * n, n * n)[:, pair_rows, :]
    return np.concatenate([top, bottom], axis=1)


def _residual_single(J: np.ndarray, C: np.ndarray, pair_rows: np.ndarray) -> np.ndarray:
    return _residual_batch(J[None], C, pair_rows)[0]


def _jacobian_single(J: np.ndarray, C: np.ndarray, pair_rows: np.ndarray) -> np.ndarray:
    return _jacobian_batch(J[None], C, pair_rows)[0]


def _lm_descend(x0: np.ndarray, C: np.ndarray, iterations: int = LM_ITERATIONS,
                box: float = SEARCH_BOX) -> tuple[np.ndarray, np.ndarray]:
    """Box-projected Levenberg-Marquardt on a batch of starting points."""
    b, p = x0.shape
    n = C.shape[0]
    pair_rows = _pair_rows(n)
    x = np.clip(x0, -box, box)
    lam = np.full(b, 1e-3)
    cost = np.sum(_residual_batch(x.reshape(b, n, n), C, pair_rows) ** 2, axis=1)
    eye_p = np.eye(p)
    stagnant = 0
    for _ in range(iterations):
        J = x.reshape(b, n, n)
        r = _residual_batch(J, C, pair_rows)
        jac = _jacobian_batch(J, C, pair_rows)
        jt = jac.transpose(0, 2, 1)
        g = np.matmul(jt, r[:, :, None])[:, :, 0]
        H = np.matmul(jt, jac)
        A = H + lam[:, None, None] * eye_p
        try:
            step = -np.linalg.solve(A, g[:, :, None])[:, :, 0]
        except np.linalg.LinAlgError:
            lam = np.minimum(lam * 10.0, 1e10)
            continue
        x_new = np.clip(x + step, -box, box)
        cost_new = np.sum(_residual_batch(x_new.reshape(b, n, n), C, pair_rows) ** 2, axis=1)
        accept = cost_new <= cost
        improved = cost - np.where(accept, cost_new, cost)
        x = np.where(accept[:, None], x_new, x)
        cost = np.where(accept, cost_new, cost)
        lam = np.clip(np.where(accept, lam / 3.0, lam * 4.0), 1e-14, 1e10)
        if np.max(improved / np.maximum(cost, 1e-300)) < 1e-12:
            stagnant += 1
            if stagnant >= 5:
                break
        else:
            stagnant = 0
    return x, cost


def _minimize_masked(x0: np.ndarray, C: np.ndarray, mask: np.ndarray,
                     frozen: np.ndarray) -> tuple[np.ndarray, float]:
    """Single-instance polish over the unfrozen entries only."""
    n = C.shape[0]
    pair_rows = _pair_rows(n)
    free_idx = np.where(mask.ravel())[0]

    def assemble(xfree):
        full = frozen.copy().ravel()
        full[free_idx] = xfree
        return full.reshape(n, n)

    result = least_squares(
        lambda xf: _residual_single(assemble(xf), C, pair_rows),
        x0.ravel()[free_idx],
        jac=lambda xf: _jacobian_single(assemble(xf), C, pair_rows)[:, free_idx],
        method="lm", xtol=1e-15, ftol=1e-15, max_nfev=200,
    )
    J = frozen.copy().ravel()
    J[free_idx] = result.x
    J = J.reshape(n, n)
    return J, float(np.sum(_residual_single(J, C, pair_rows) ** 2))


def _round_matrix(J: np.ndarray, bound: int) -> Matrix:
    return Matrix([[rationalize(float(x), bound) for x in row] for row in J])


def _try_exact(alg: LieAlgebra, J: np.ndarray) -> Matrix | None:
    for bound in _ROUND_LADDER:
        cand = _round_matrix(J, bound)
        if is_invariant_cs(alg, cand):
            return cand
    return None


def _snap_distance(x: float, bound: int = DENOMINATOR_BOUND) -> float:
    return abs(x - float(rationalize(x, bound)))


def _progressive_snap(alg: LieAlgebra, J: np.ndarray, C: np.ndarray,
                      tol: float) -> Matrix | None:
    """Freeze entries one at a time to nearby small rationals, re-solving
    the remaining entries; quadratic constraints then resolve rationally."""
    n = J.shape[0]
    mask = np.ones((n, n), dtype=bool)  # True = still free
    frozen = J.copy()
    for _ in range(n * n):
        cand = _try_exact(alg, frozen)
        if cand is not None:
            return cand
        if not mask.any():
            break
        free_positions = np.argwhere(mask)
        dists = [_snap_distance(frozen[i, j]) for i, j in free_positions]
        order = np.argsort(dists, kind="stable")
        snapped = False
        for pos in order[:3]:
            i, j = free_positions[pos]
            backup = frozen[i, j]
            frozen[i, j] = float(rationalize(float(frozen[i, j]), DENOMINATOR_BOUND))
            mask[i, j] = False
            if not mask.any():
                snapped = True
                break
            refined, res = _minimize_masked(frozen, C, mask, frozen)
            if res < max(tol, 1e-14) * 1e3:
                frozen = refined
                snapped = True
                break
            mask[i, j] = True
            frozen[i, j] = backup
        if not snapped:
            return None
    return _try_exact(alg, frozen)


def numeric_invariant_search(
    alg: LieAlgebra,
    restarts: int,
    tol: float = DEFAULT_TOL,
    seed: int = 2024,
) -> Verdict:
    """Seeded multistart minimization with exact certification.

    Returns Exists only for a rationalized candidate that re-verifies
    exactly; otherwise Unknown carrying the observed residual floor.
    Each restart draws its start from an independently derived seed and
    the reduction is an order-independent minimum keyed by (residual,
    restart index), so the result does not depend on scheduling.
    """
    if alg.dim % 2 != 0:
        raise ValueError(f"even dimension required, got {alg.dim}")
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    if restarts < 1:
        raise ValueError("at least one restart required")
    n = alg.dim
    C = _structure_tensor(alg)

    starts = np.empty((restarts, n * n))
    for k in range(restarts):
        rng = np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(k,)))
        starts[k] = rng.uniform(-2.0, 2.0, n * n)

    xs, costs = _lm_descend(starts, C)

    order = sorted(range(restarts), key=lambda k: (costs[k], k))
    best = order[0]
    for k in order[:_CERTIFY_ATTEMPTS]:
        if costs[k] >= tol:
            break
        J = xs[k].reshape(n, n)
        witness = _try_exact(alg, J)
        if witness is None:
            witness = _progressive_snap(alg, J.copy(), C, tol)
        if witness is not None:
            return Verdict(
                Status.EXISTS,
                CertificateKind.EXPLICIT_WITNESS,
                witness=witness,
                evidence={"restart": k, "residual": float(costs[k]), "restarts": restarts},
            )
    return Verdict(
        Status.UNKNOWN,
        CertificateKind.RESIDUAL_FLOOR,
        evidence={
            "min_residual": float(costs[best]),
            "best_restart": best,
            "restarts": restarts,
            "tol": tol,
            "residuals": [float(c) for c in costs],
        },
    )


def certify_candidate(alg: LieAlgebra, J: np.ndarray, tol: float = DEFAULT_TOL) -> Matrix | None:
    """Public rationalization hook: exact witness from a float candidate or None."""
    C = _structure_tensor(alg)
    witness = _try_exact(alg, J)
    if witness is None:
        witness = _progressive_snap(alg, J.copy(), C, tol)
    return witness


def frobenius_residual(alg: LieAlgebra, J: Matrix) -> float:
    """Float residual of an exact candidate; zero iff invariant (up to fp)."""
    C = _structure_tensor(alg)
    Jf = np.array([[float(x.re) for x in row] for row in J.rows])
    return float(np.sum(_residual_single(Jf, C, _pair_rows(alg.dim)) ** 2))

"""Lower central series, filiform detection and characteristic sequences.

The characteristic sequence of a nilpotent algebra is the lexicographic
maximum, over x outside the derived algebra, of the Jordan block sizes
of the nilpotent operator ad x.  The maximum is rank-determined, hence
attained on a Zariski-dense set; a small deterministic sample suffices
(checked against brute force on every catalog algebra at dim <= 8).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .algebra import LieAlgebra, adjoint, bracket
from .linalg import Matrix, Subspace, Vector, as_vector, basis_vector, vec_add
from .scalars import Scalar

CharSequence = tuple[int, ...]

SAMPLE_SEED = 0x5EED


class NonNilpotentError(ValueError):
    """Operation requires a nilpotent input."""


@dataclass(frozen=True)
class SeriesProfile:
    """Terms of the descending central series, C^0 = g down to stabilization."""

    subspaces: tuple[Subspace, ...]

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(s.dim for s in self.subspaces)

    @property
    def reaches_zero(self) -> bool:
        return self.subspaces[-1].dim == 0

    @property
    def derived(self) -> Subspace:
        return self.subspaces[1]


def lower_central_series(alg: LieAlgebra) -> SeriesProfile:
    """C^1 = [g, g], C^{i+1} = [g, C^i]; stops when the dimension stabilizes."""
    n = alg.dim
    full = Subspace(n, [basis_vector(n, i) for i in range(n)])
    terms = [full]
    current = full
    while True:
        vecs = [
            bracket(alg, basis_vector(n, i), v)
            for i in range(n)
            for v in current.basis
        ]
        nxt = Subspace(n, vecs)
        if nxt.dim == current.dim:
            # stabilized without reaching zero: not nilpotent
            terms.append(nxt)
            break
        terms.append(nxt)
        current = nxt
        if current.dim == 0:
            break
    return SeriesProfile(tuple(terms))


def is_nilpotent(alg: LieAlgebra) -> bool:
    return lower_central_series(alg).reaches_zero


def is_filiform(alg: LieAlgebra) -> bool:
    """Maximal-class test: dim C^1 = n-2 and dim C^i = n-i-1 for i >= 2."""
    n = alg.dim
    if n < 3:
        return False
    series = lower_central_series(alg)
    dims = series.dims
    expected = [n, n - 2] + [n - i - 1 for i in range(2, n)]  # ends at 0
    return series.reaches_zero and list(dims) == expected


def jordan_profile(N: Matrix) -> CharSequence:
    """Jordan block sizes of a nilpotent matrix, from ranks of its powers."""
    if not N.is_square():
        raise ValueError("jordan_profile needs a square matrix")
    n = N.nrows
    ranks = [n]
    power = Matrix.identity(n)
    for _ in range(n):
        power = power * N
        r = power.rank()
        ranks.append(r)
        if r == 0:
            break
    if ranks[-1] != 0:
        raise NonNilpotentError("matrix is not nilpotent")
    # number of blocks of size >= k is rank(N^{k-1}) - rank(N^k)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes: list[int] = []
    for k, count in enumerate(at_least, start=1):
        exactly = count - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exactly)
    sizes.sort(reverse=True)
    return tuple(sizes)


def _profile_of(alg: LieAlgebra, x: Vector) -> CharSequence:
    return jordan_profile(adjoint(alg, x))


def _sample_vectors(alg: LieAlgebra, derived: Subspace) -> list[Vector]:
    """Deterministic sample of generic elements outside the derived algebra."""
    n = alg.dim
    ei = [basis_vector(n, i) for i in range(n)]
    sample = [e for e in ei if not derived.contains(e)]
    for i in range(n):
        for j in range(i + 1, n):
            v = vec_add(ei[i], ei[j])
            if not derived.contains(v):
                sample.append(v)
    rng = random.Random(SAMPLE_SEED)
    found = 0
    attempts = 0
    while found < 3 and attempts < 100:
        attempts += 1
        v = as_vector([rng.randint(-3, 3) for _ in range(n)])
        if not derived.contains(v):
            sample.append(v)
            found += 1
    return sample


def characteristic_sequence(alg: LieAlgebra) -> tuple[CharSequence, Vector]:
    """Maximal Jordan profile of ad x over the generic sample, with a witness."""
    series = lower_central_series(alg)
    if not series.reaches_zero:
        raise NonNilpotentError("characteristic sequence requires a nilpotent algebra")
    if alg.dim == 1:
        return (1,), basis_vector(1, 0)
    best: tuple[CharSequence, Vector] | None = None
    for x in _sample_vectors(alg, series.derived):
        profile = _profile_of(alg, x)
        if best is None or profile > best[0]:
            best = (profile, x)
    assert best is not None
    return best


def find_characteristic_vector(alg: LieAlgebra) -> Vector:
    return characteristic_sequence(alg)[1]


def is_characteristic_vector(alg: LieAlgebra, x: Sequence) -> bool:
    seq, _ = characteristic_sequence(alg)
    return _profile_of(alg, as_vector(x)) == seq


def pairing_pattern_holds(seq: Sequence[int]) -> bool:
    """True iff the parts group entirely into equal pairs."""
    parts = sorted(seq, reverse=True)
    if len(parts) % 2 != 0:
        return False
    return all(parts[i] == parts[i + 1] for i in range(0, len(parts), 2))

"""Built-in algebra catalog with expected analysis results.

Keys: ``abelian<n>``, ``L<n>`` (the model filiform algebra, n >= 3),
``h3``, ``h3+h3``, ``g6_2``, ``g8_2``, ``g8_3``, ``g8_4``, ``r2_2``,
``r4_2``.  Basis conventions keep X-vectors before Y-vectors so that
graded subspaces are coordinate-aligned.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .algebra import LieAlgebra
from .linalg import Matrix, basis_vector
from .scalars import Scalar


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    algebra: LieAlgebra
    provenance: str
    expected: dict


def _unit(n: int, k: int):
    return basis_vector(n, k)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, labels=[f"X{i+1}" for i in range(n)])


def model_filiform(n: int) -> LieAlgebra:
    """[X1, Xi] = X_{i+1} for i = 2..n-1; all other brackets zero."""
    if n < 3:
        raise ValueError("the model filiform algebra needs dimension >= 3")
    brackets = {(0, i): _unit(n, i + 1) for i in range(1, n - 1)}
    return LieAlgebra(n, brackets, labels=[f"X{i+1}" for i in range(n)])


def heisenberg3() -> LieAlgebra:
    return LieAlgebra(3, {(0, 1): _unit(3, 2)}, labels=["X1", "X2", "X3"])


def heisenberg_sum() -> LieAlgebra:
    """h3 + h3 with [X1,X2]=X3 and [X4,X5]=X6."""
    return LieAlgebra(
        6,
        {(0, 1): _unit(6, 2), (3, 4): _unit(6, 5)},
        labels=[f"X{i+1}" for i in range(6)],
    )


def _paired_algebra(pairs: dict[tuple[str, str], tuple[str, int]], labels: list[str]) -> LieAlgebra:
    n = len(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    brackets: dict[tuple[int, int], tuple] = {}
    for (a, b), (target, sign) in pairs.items():
        v = [Scalar(0)] * n
        v[index[target]] = Scalar(sign)
        brackets[(index[a], index[b])] = tuple(v)
    return LieAlgebra(n, brackets, labels=labels)


def g6_2() -> LieAlgebra:
    """Six-dimensional two-step algebra: [X2,X3]=-[Y2,Y3]=X1, [X2,Y3]=[Y2,X3]=Y1."""
    return _paired_algebra(
        {
            ("X2", "X3"): ("X1", 1),
            ("Y2", "Y3"): ("X1", -1),
            ("X2", "Y3"): ("Y1", 1),
            ("Y2", "X3"): ("Y1", 1),
        },
        ["X1", "X2", "X3", "Y1", "Y2", "Y3"],
    )


def g8_2() -> LieAlgebra:
    """g6_2 plus a two-dimensional abelian summand (X4, Y4)."""
    return _paired_algebra(
        {
            ("X2", "X3"): ("X1", 1),
            ("Y2", "Y3"): ("X1", -1),
            ("X2", "Y3"): ("Y1", 1),
            ("Y2", "X3"): ("Y1", 1),
        },
        ["X1", "X2", "X3", "Y1", "Y2", "Y3", "X4", "Y4"],
    )


def g8_3() -> LieAlgebra:
    return _paired_algebra(
        {
            ("X2", "X4"): ("X1", 1),
            ("Y2", "Y4"): ("X1", -1),
            ("X2", "Y4"): ("Y1", 1),
            ("Y2", "X4"): ("Y1", 1),
            ("X3", "X4"): ("X2", 1),
            ("Y3", "Y4"): ("X2", -1),
            ("X3", "Y4"): ("Y2", 1),
            ("Y3", "X4"): ("Y2", 1),
        },
        ["X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"],
    )


def g8_4() -> LieAlgebra:
    return _paired_algebra(
        {
            ("X2", "X3"): ("X1", 1),
            ("Y2", "Y3"): ("X1", -1),
            ("X2", "Y3"): ("Y1", 1),
            ("Y2", "X3"): ("Y1", 1),
            ("X2", "X4"): ("Y1", 1),
            ("Y2", "Y4"): ("Y1", -1),
            ("X2", "Y4"): ("X1", -1),
            ("Y2", "X4"): ("X1", -1),
        },
        ["X1", "X2", "X3", "X4", "Y1", "Y2", "Y3", "Y4"],
    )


def r2_2() -> LieAlgebra:
    """The non-nilpotent solvable plane: [X1,X2] = X1."""
    return LieAlgebra(2, {(0, 1): _unit(2, 0)}, labels=["X1", "X2"])


def r4_2() -> LieAlgebra:
    """Four-dimensional solvable with a rotation action on span{X3,X4}."""
    return LieAlgebra(
        4,
        {
            (0, 2): _unit(4, 2),                       # [X1,X3]=X3
            (0, 3): _unit(4, 3),                       # [X1,X4]=X4
            (1, 2): tuple(-x for x in _unit(4, 3)),    # [X2,X3]=-X4
            (1, 3): _unit(4, 2),                       # [X2,X4]=X3
        },
        labels=["X1", "X2", "X3", "X4"],
    )


def r4_2_structure_family(a, b) -> Matrix:
    """The commutant of r4_2: J(X1)=aX1+bX2, J(X2)=-bX1+aX2,
    J(X3)=aX3-bX4, J(X4)=bX3+aX4.  Bi-invariant complex structures are
    exactly the members with a=0, b=+-1."""
    a, b = Fraction(a), Fraction(b)
    return Matrix(
        [
            [a, -b, 0, 0],
            [b, a, 0, 0],
            [0, 0, a, b],
            [0, 0, -b, a],
        ]
    )


_BUILDERS = {
    "h3": heisenberg3,
    "h3+h3": heisenberg_sum,
    "g6_2": g6_2,
    "g8_2": g8_2,
    "g8_3": g8_3,
    "g8_4": g8_4,
    "r2_2": r2_2,
    "r4_2": r4_2,
}

_EXPECTED = {
    "h3": {"valid": True, "nilpotent": True, "filiform": True, "char_sequence": (2, 1)},
    "h3+h3": {
        "valid": True,
        "nilpotent": True,
        "filiform": False,
        "char_sequence": (2, 2, 1, 1),
        "bi_invariant": "not_exists",
    },
    "g6_2": {
        "valid": True,
        "nilpotent": True,
        "filiform": False,
        "char_sequence": (2, 2, 1, 1),
        "bi_invariant": "exists",
    },
    "g8_2": {
        "valid": True,
        "nilpotent": True,
        "filiform": False,
        "char_sequence": (2, 2, 1, 1, 1, 1),
        "bi_invariant": "exists",
    },
    "g8_3": {
        "valid": True,
        "nilpotent": True,
        "filiform": False,
        "char_sequence": (3, 3, 1, 1),
        "bi_invariant": "exists",
    },
    "g8_4": {
        "valid": True,
        "nilpotent": True,
        "filiform": False,
        "char_sequence": (2, 2, 1, 1, 1, 1),
        "bi_invariant": "exists",
    },
    "r2_2": {"valid": True, "nilpotent": False, "filiform": False, "bi_invariant": "not_exists"},
    "r4_2": {"valid": True, "nilpotent": False, "filiform": False, "bi_invariant": "exists"},
}

_PROVENANCE = {
    "h3": "three-dimensional Heisenberg algebra",
    "h3+h3": "sum of two Heisenberg algebras",
    "g6_2": "nilpotent catalog, dimension 6",
    "g8_2": "nilpotent catalog, dimension 8 (g6_2 plus abelian plane)",
    "g8_3": "nilpotent catalog, dimension 8",
    "g8_4": "nilpotent catalog, dimension 8",
    "r2_2": "solvable catalog, dimension 2",
    "r4_2": "solvable catalog, dimension 4",
}

CATALOG_KEYS = [
    "abelian2", "abelian4", "abelian6", "abelian8",
    "h3", "h3+h3", "g6_2", "g8_2", "g8_3", "g8_4",
    "L3", "L4", "L5", "L6", "L7", "L8", "L9", "L10",
    "r2_2", "r4_2",
]


def builtin(key: str) -> CatalogEntry:
    """Catalog entry for a builtin key; raises KeyError on unknown keys."""
    if m := re.fullmatch(r"abelian(\d+)", key):
        n = int(m.group(1))
        if not 1 <= n <= 32:
            raise KeyError(f"abelian dimension out of range: {key}")
        expected = {
            "valid": True,
            "nilpotent": True,
            "filiform": False,
            "char_sequence": (1,) * n,
        }
        if n % 2 == 0:
            expected["bi_invariant"] = "exists"
        return CatalogEntry(key, abelian(n), f"abelian algebra of dimension {n}", expected)
    if m := re.fullmatch(r"L(\d+)", key):
        n = int(m.group(1))
        if not 3 <= n <= 32:
            raise KeyError(f"model filiform dimension out of range: {key}")
        expected = {
            "valid": True,
            "nilpotent": True,
            "filiform": True,
            "char_sequence": (n - 1, 1),
        }
        if n % 2 == 0:
            expected["bi_invariant"] = "not_exists"
        return CatalogEntry(key, model_filiform(n), f"model filiform algebra of dimension {n}", expected)
    if key in _BUILDERS:
        return CatalogEntry(key, _BUILDERS[key](), _PROVENANCE[key], dict(_EXPECTED[key]))
    raise KeyError(f"unknown builtin key: {key}")


def builtin_algebra(key: str) -> LieAlgebra:
    return builtin(key).algebra


def recompute_expected(entry: CatalogEntry, seed: int) -> dict:
    """Recompute every property named in the entry's expected map."""
    from .algebra import validate
    from .nilpotent import characteristic_sequence, is_filiform, is_nilpotent
    from .structures import solve_bi_invariant

    alg = entry.algebra
    computed = {}
    for prop in entry.expected:
        if prop == "valid":
            computed[prop] = validate(alg).ok
        elif prop == "nilpotent":
            computed[prop] = is_nilpotent(alg)
        elif prop == "filiform":
            computed[prop] = is_filiform(alg)
        elif prop == "char_sequence":
            computed[prop] = characteristic_sequence(alg)[0]
        elif prop == "bi_invariant":
            computed[prop] = solve_bi_invariant(alg, seed=seed).status.value
        else:
            raise KeyError(f"unknown expected property {prop!r}")
    return computed


def verify_catalog(seed: int, keys: list[str] | None = None) -> tuple[list[dict], bool]:
    """Recompute all expected maps; returns per-entry results and overall flag."""
    results = []
    all_match = True
    for key in keys or CATALOG_KEYS:
        entry = builtin(key)
        computed = recompute_expected(entry, seed)
        diffs = [
            {"property": prop, "expected": entry.expected[prop], "computed": computed[prop]}
            for prop in entry.expected
            if entry.expected[prop] != computed[prop]
        ]
        match = not diffs
        all_match = all_match and match
        results.append(
            {
                "key": key,
                "provenance": entry.provenance,
                "expected": dict(entry.expected),
                "computed": computed,
                "match": match,
                "diffs": diffs,
            }
        )
    return results, all_match

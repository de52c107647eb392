"""Small multivariate polynomial systems over Q, solved by elimination.

Built for the quadratic systems that arise when an endomorphism is
parametrized over a commutant basis and required to square to -Id.
The solver distinguishes three outcomes per branch: a rational witness,
a proof that no REAL solution exists, or indeterminate.  Emptiness is
only ever reported when every branch is closed by a sound move
(nonzero constants, negative discriminants, positive-definite forms),
so it is valid over the reals, not merely over Q.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

Monomial = tuple[int, ...]

WITNESS = "witness"
EMPTY = "empty"
INDETERMINATE = "indeterminate"

PROBE_VALUES = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(2),
    Fraction(-2),
    Fraction(1, 2),
    Fraction(-1, 2),
)


class Poly:
    """Polynomial in a fixed number of variables, sparse monomial dict."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs: dict[Monomial, Fraction] | None = None):
        self.nvars = nvars
        self.coeffs: dict[Monomial, Fraction] = {}
        if coeffs:
            for mono, c in coeffs.items():
                if c != 0:
                    self.coeffs[mono] = Fraction(c)

    @staticmethod
    def constant(nvars: int, c) -> "Poly":
        c = Fraction(c)
        return Poly(nvars, {(0,) * nvars: c} if c else {})

    @staticmethod
    def variable(nvars: int, i: int) -> "Poly":
        mono = tuple(1 if j == i else 0 for j in range(nvars))
        return Poly(nvars, {mono: Fraction(1)})

    def is_zero(self) -> bool:
        return not self.coeffs

    def as_constant(self) -> Optional[Fraction]:
        if self.is_zero():
            return Fraction(0)
        if len(self.coeffs) == 1:
            mono, c = next(iter(self.coeffs.items()))
            if all(e == 0 for e in mono):
                return c
        return None

    def variables(self) -> set[int]:
        out: set[int] = set()
        for mono in self.coeffs:
            out.update(i for i, e in enumerate(mono) if e > 0)
        return out

    def degree_in(self, i: int) -> int:
        return max((mono[i] for mono in self.coeffs), default=0)

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, Fraction(0)) + c
        return Poly(self.nvars, out)

    def __sub__(self, other: "Poly") -> "Poly":
        out = dict(self.coeffs)
        for mono, c in other.coeffs.items():
            out[mono] = out.get(mono, Fraction(0)) - c
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, Fraction(0)) + c1 * c2
        return Poly(self.nvars, out)

    def scale(self, c) -> "Poly":
        c = Fraction(c)
        return Poly(self.nvars, {m: c * v for m, v in self.coeffs.items()})

    def substitute(self, i: int, value: "Poly") -> "Poly":
        """Replace variable i by the given polynomial."""
        out = Poly.constant(self.nvars, 0)
        for mono, c in self.coeffs.items():
            term = Poly.constant(self.nvars, c)
            for j, e in enumerate(mono):
                if e == 0:
                    continue
                base = value if j == i else Poly.variable(self.nvars, j)
                for _ in range(e):
                    term = term * base
            out = out + term
        return out

    def evaluate(self, point: dict[int, Fraction]) -> Fraction:
        total = Fraction(0)
        for mono, c in self.coeffs.items():
            v = c
            for j, e in enumerate(mono):
                if e:
                    v *= point.get(j, Fraction(0)) ** e
            total += v
        return total

    def key(self) -> tuple:
        return tuple(sorted(self.coeffs.items()))

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for mono, c in sorted(self.coeffs.items()):
            vars_part = "*".join(
                f"t{i}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(mono)
                if e > 0
            )
            parts.append(f"{c}" + (f"*{vars_part}" if vars_part else ""))
        return " + ".join(parts)


def _sqrt_exact(q: Fraction) -> Optional[Fraction]:
    if q < 0:
        return None
    num = math.isqrt(q.numerator)
    den = math.isqrt(q.denominator)
    if num * num == q.numerator and den * den == q.denominator:
        return Fraction(num, den)
    return None


def _no_real_zero(p: Poly) -> bool:
    """Sound one-sided test: all-even monomials, coefficients of one sign,
    nonzero constant term; such a polynomial never vanishes over R."""
    const = p.coeffs.get((0,) * p.nvars)
    if const is None:
        return False
    sign = 1 if const > 0 else -1
    for mono, c in p.coeffs.items():
        if any(e % 2 for e in mono):
            return False
        if (c > 0) != (sign > 0):
            return False
    return True


def _univariate_parts(p: Poly, i: int) -> list[Fraction]:
    """Coefficient list [c0, c1, ...] if p involves only variable i, else []."""
    coeffs = [Fraction(0)] * (p.degree_in(i) + 1)
    for mono, c in p.coeffs.items():
        if any(e > 0 and j != i for j, e in enumerate(mono)):
            return []
        coeffs[mono[i]] += c
    return coeffs


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots of a univariate polynomial given low-to-high coeffs."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    if not coeffs:
        return []
    roots = []
    if coeffs[0] == 0:
        roots.append(Fraction(0))
        k = next(idx for idx, c in enumerate(coeffs) if c != 0)
        coeffs = coeffs[k:]
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 == 0:
        return sorted(set(roots))

    def divisors(x: int) -> list[int]:
        out = []
        d = 1
        while d * d <= x:
            if x % d == 0:
                out.extend([d, x // d])
            d += 1
        return sorted(set(out))

    for p in divisors(a0):
        for q in divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if sum(c * cand**k for k, c in enumerate(ints)) == 0:
                    roots.append(cand)
    return sorted(set(roots))


def _univariate_status(coeffs: list[Fraction]) -> tuple[str, list[Fraction]]:
    """Classify a nonconstant univariate equation: all real roots rational
    ('branch'), provably no real roots ('empty'), or 'indeterminate'."""
    while coeffs and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
    deg = len(coeffs) - 1
    if deg == 1:
        return "branch", [-coeffs[0] / coeffs[1]]
    if deg == 2:
        c0, c1, c2 = coeffs
        disc = c1 * c1 - 4 * c2 * c0
        if disc < 0:
            return EMPTY, []
        root = _sqrt_exact(disc)
        if root is None:
            return INDETERMINATE, []
        return "branch", sorted({(-c1 - root) / (2 * c2), (-c1 + root) / (2 * c2)})
    # higher degree: peel rational roots; beyond that stay indeterminate
    roots = _rational_roots(list(coeffs))
    if roots:
        return "branch_partial", roots
    return INDETERMINATE, []


class SystemSolver:
    """Depth-first elimination over the rationals with real-emptiness moves."""

    def __init__(self, nvars: int, max_nodes: int = 800):
        self.nvars = nvars
        self.max_nodes = max_nodes
        self.nodes = 0

    def solve(self, system: Iterable[Poly]) -> tuple[str, dict[int, Fraction] | None]:
        polys = [p for p in system if not p.is_zero()]
        status, point = self._solve(polys, {}, witness_only=False)
        return status, point

    # a binding maps var -> Poly in the remaining variables; bindings are
    # applied to the working system immediately, so evaluation at a leaf
    # proceeds in reverse binding order with free variables set to zero.
    def _solve(
        self,
        system: list[Poly],
        bindings: dict[int, Poly],
        witness_only: bool,
    ) -> tuple[str, dict[int, Fraction] | None]:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            return INDETERMINATE, None

        system = [p for p in system if not p.is_zero()]
        for p in system:
            c = p.as_constant()
            if c is not None and c != 0:
                return EMPTY, None
        if not system:
            return WITNESS, self._finish(bindings)
        system = sorted(system, key=Poly.key)

        for p in system:
            if _no_real_zero(p):
                return EMPTY, None

        # exact linear substitution: variable with constant coefficient
        for p in system:
            for i in sorted(p.variables()):
                if p.degree_in(i) != 1:
                    continue
                coeff = Poly(self.nvars, {
                    tuple(e if j != i else e - 1 for j, e in enumerate(mono)): c
                    for mono, c in p.coeffs.items()
                    if mono[i] == 1
                })
                cval = coeff.as_constant()
                if cval is None or cval == 0:
                    continue
                rest = Poly(self.nvars, {m: c for m, c in p.coeffs.items() if m[i] == 0})
                value = rest.scale(Fraction(-1) / cval)
                return self._bind(system, bindings, i, value, witness_only)

        # univariate equations: branch on exact roots, close on no-real-root
        branch_candidate = None
        for p in system:
            vs = p.variables()
            if len(vs) != 1:
                continue
            i = next(iter(vs))
            coeffs = _univariate_parts(p, i)
            status, roots = _univariate_status(coeffs)
            if status == EMPTY:
                return EMPTY, None
            if status == "branch" and branch_candidate is None:
                branch_candidate = (i, roots, True)
            if status == "branch_partial" and branch_candidate is None:
                branch_candidate = (i, roots, False)
        if branch_candidate is not None:
            i, roots, complete = branch_candidate
            results = []
            for r in roots:
                res = self._bind(system, bindings, i, Poly.constant(self.nvars, r),
                                 witness_only or not complete)
                if res[0] == WITNESS:
                    return res
                results.append(res[0])
            if complete and all(s == EMPTY for s in results) and not witness_only:
                return EMPTY, None
            return INDETERMINATE, None

        # content factoring: every monomial of p divisible by some variable
        for p in system:
            common = [i for i in p.variables() if all(m[i] > 0 for m in p.coeffs)]
            if not common:
                continue
            i = min(common)
            quotient = Poly(self.nvars, {
                tuple(e if j != i else e - 1 for j, e in enumerate(mono)): c
                for mono, c in p.coeffs.items()
            })
            rest = [q for q in system if q is not p]
            res_zero = self._bind(system, bindings, i, Poly.constant(self.nvars, 0),
                                  witness_only)
            if res_zero[0] == WITNESS:
                return res_zero
            res_quot = self._solve(rest + [quotient], bindings, witness_only)
            if res_quot[0] == WITNESS:
                return res_quot
            if res_zero[0] == EMPTY and res_quot[0] == EMPTY and not witness_only:
                return EMPTY, None
            return INDETERMINATE, None

        # probe small rational values for one variable (witness hunting only;
        # the resulting subtree can no longer certify emptiness)
        active = sorted(set().union(*(p.variables() for p in system)))
        i = active[0]
        for value in PROBE_VALUES:
            res = self._bind(system, bindings, i, Poly.constant(self.nvars, value), True)
            if res[0] == WITNESS:
                return res
        return INDETERMINATE, None

    def _bind(
        self,
        system: list[Poly],
        bindings: dict[int, Poly],
        i: int,
        value: Poly,
        witness_only: bool,
    ) -> tuple[str, dict[int, Fraction] | None]:
        new_system = [p.substitute(i, value) for p in system]
        new_bindings = dict(bindings)
        new_bindings[i] = value
        return self._solve(new_system, new_bindings, witness_only)

    def _finish(self, bindings: dict[int, Poly]) -> dict[int, Fraction]:
        point: dict[int, Fraction] = {}
        for i in range(self.nvars):
            if i not in bindings:
                point[i] = Fraction(0)
        for i in reversed(list(bindings)):
            point[i] = bindings[i].evaluate(point)
        return {i: point.get(i, Fraction(0)) for i in range(self.nvars)}


def solve_square_root_of_minus_identity(
    products: list[list[list[list[Fraction]]]],
    identity_entries: list[list[Fraction]],
    max_nodes: int = 800,
) -> tuple[str, list[Fraction] | None]:
    """Solve (sum_k t_k B_k)^2 = -Id given all products B_k B_l.

    products[k][l] is the matrix B_k @ B_l as nested Fractions.
    Returns (status, t-values) with status in {witness, empty, indeterminate}.
    """
    m = len(products)
    n = len(identity_entries)
    polys = []
    for i in range(n):
        for j in range(n):
            coeffs: dict[Monomial, Fraction] = {}
            for k in range(m):
                for l in range(m):
                    c = products[k][l][i][j]
                    if c == 0:
                        continue
                    mono = [0] * m
                    mono[k] += 1
                    mono[l] += 1
                    key = tuple(mono)
                    coeffs[key] = coeffs.get(key, Fraction(0)) + c
            const = identity_entries[i][j]
            if const != 0:
                key = (0,) * m
                coeffs[key] = coeffs.get(key, Fraction(0)) + const
            p = Poly(m, coeffs)
            if not p.is_zero():
                polys.append(p)
    solver = SystemSolver(m, max_nodes=max_nodes)
    status, point = solver.solve(polys)
    if status == WITNESS and point is not None:
        return status, [point[i] for i in range(m)]
    return status, None

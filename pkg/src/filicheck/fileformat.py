"""Line-oriented text format for structure constants.

    # comment
    dim 6
    field Q
    bracket 2 3 : 1 e1
    bracket 2 6 : 1/2 e4 -1 e5

Unspecified brackets are zero; [j,i] is auto-completed from [i,j] and
an explicit inconsistent line is a conflict.  Indices are 1-based.
Coefficients are ``p``, ``p/q`` or complex forms like ``1/2+1/3 i``
(field Qi only).
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import InvalidAlgebraError, LieAlgebra, validate
from .linalg import Vector, vec_is_zero, vec_scale, zero_vector
from .scalars import FIELD_Q, FIELD_QI, Scalar, format_scalar


class AlgebraFormatError(ValueError):
    """Syntax or consistency error in the text format, with position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class BracketConflictError(AlgebraFormatError):
    """Explicit bracket contradicts antisymmetry of an earlier line."""


def parse_scalar(text: str) -> Scalar:
    """Parse ``p``, ``p/q``, ``a+b i``, ``b i`` or ``i`` into a Scalar."""
    t = "".join(text.split())
    if not t:
        raise ValueError(f"malformed coefficient {text!r}")
    try:
        if not t.endswith("i"):
            return Scalar(Fraction(t))
        body = t[:-1]
        split_at = max(body.rfind("+"), body.rfind("-"))
        if split_at > 0:
            re_text, im_text = body[:split_at], body[split_at:]
        else:
            re_text, im_text = "", body
        if im_text in ("", "+"):
            im_part = Fraction(1)
        elif im_text == "-":
            im_part = Fraction(-1)
        else:
            im_part = Fraction(im_text)
        re_part = Fraction(re_text) if re_text else Fraction(0)
        return Scalar(re_part, im_part)
    except ValueError:
        raise ValueError(f"malformed coefficient {text!r}") from None


def parse(text: str, check_jacobi: bool = True) -> LieAlgebra:
    """Parse the text format; validates antisymmetry and (optionally) Jacobi."""
    dim: int | None = None
    field = FIELD_Q
    field_seen = False
    given: dict[tuple[int, int], tuple[Vector, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip("\r").strip()
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]
        if head == "dim":
            if dim is not None:
                raise AlgebraFormatError("duplicate dim header", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise AlgebraFormatError("dim expects a single positive integer", lineno)
            dim = int(tokens[1])
            if dim < 1 or dim > 32:
                raise AlgebraFormatError("dimension must be in 1..32", lineno)
        elif head == "field":
            if field_seen:
                raise AlgebraFormatError("duplicate field header", lineno)
            if len(tokens) != 2 or tokens[1] not in (FIELD_Q, FIELD_QI):
                raise AlgebraFormatError("field expects Q or Qi", lineno)
            field = tokens[1]
            field_seen = True
        elif head == "bracket":
            if dim is None:
                raise AlgebraFormatError("bracket line before dim header", lineno)
            _parse_bracket_line(line, lineno, dim, field, given)
        else:
            raise AlgebraFormatError(f"unknown directive {head!r}", lineno)

    if dim is None:
        raise AlgebraFormatError("missing dim header", max(1, text.count("\n") + 1))

    brackets = {(i - 1, j - 1): value for (i, j), (value, _) in given.items()}
    alg = LieAlgebra(dim, brackets, field=field)
    if check_jacobi:
        report = validate(alg)
        if not report.ok:
            raise InvalidAlgebraError(
                f"Jacobi identity fails at {len(report.jacobi_violations)} "
                f"index tuple(s), first at {report.jacobi_violations[0]}"
            )
    return alg


def _parse_bracket_line(line, lineno, dim, field, given):
    m = re.match(r"bracket\s+(\d+)\s+(\d+)\s*:\s*", line)
    if not m:
        raise AlgebraFormatError("expected 'bracket <i> <j> : <terms>'", lineno)
    i, j = int(m.group(1)), int(m.group(2))
    for idx in (i, j):
        if not 1 <= idx <= dim:
            raise AlgebraFormatError(f"index {idx} out of range 1..{dim}", lineno,
                                     line.index(str(idx), 7) + 1)
    rest = line[m.end():]
    offset = m.end()
    tokens = [(t.group(0), offset + t.start() + 1) for t in re.finditer(r"\S+", rest)]
    if not tokens:
        raise AlgebraFormatError("bracket line has no terms", lineno, offset + 1)

    value = list(zero_vector(dim))
    pending: list[tuple[str, int]] = []
    for tok, col in tokens:
        if re.fullmatch(r"e\d+", tok):
            if not pending:
                raise AlgebraFormatError(f"basis term {tok} without coefficient", lineno, col)
            coeff_text = " ".join(p[0] for p in pending)
            try:
                coeff = parse_scalar(coeff_text)
            except ValueError:
                raise AlgebraFormatError(f"malformed coefficient {coeff_text!r}",
                                         lineno, pending[0][1]) from None
            if field == FIELD_Q and not coeff.is_real():
                raise AlgebraFormatError("complex coefficient in a Q algebra",
                                         lineno, pending[0][1])
            k = int(tok[1:])
            if not 1 <= k <= dim:
                raise AlgebraFormatError(f"basis index {tok} out of range 1..{dim}", lineno, col)
            value[k - 1] = value[k - 1] + coeff
            pending = []
        else:
            pending.append((tok, col))
    if pending:
        raise AlgebraFormatError(f"dangling coefficient {pending[0][0]!r}", lineno, pending[0][1])

    vec = tuple(value)
    if i == j:
        if not vec_is_zero(vec):
            raise BracketConflictError(f"[{i},{i}] must vanish by antisymmetry", lineno)
        return
    key, stored = ((i, j), vec) if i < j else ((j, i), vec_scale(Scalar(-1), vec))
    if key in given:
        old, old_line = given[key]
        if old != stored:
            raise BracketConflictError(
                f"bracket [{i},{j}] conflicts with line {old_line} under antisymmetry",
                lineno,
            )
        return
    given[key] = (stored, lineno)


def serialize(alg: LieAlgebra) -> str:
    """Canonical text: headers, then nonzero brackets sorted by (i,j), LF."""
    lines = [f"dim {alg.dim}", f"field {alg.field}"]
    for i in range(alg.dim):
        for j in range(i + 1, alg.dim):
            cell = alg.table[i][j]
            if vec_is_zero(cell):
                continue
            terms = " ".join(
                f"{format_scalar(c, spaced=True)} e{k+1}"
                for k, c in enumerate(cell)
                if not c.is_zero()
            )
            lines.append(f"bracket {i+1} {j+1} : {terms}")
    return "\n".join(lines) + "\n"


def load(path: str, check_jacobi: bool = True) -> LieAlgebra:
    with open(path, "r", encoding="utf-8") as fh:
        return parse(fh.read(), check_jacobi=check_jacobi)


def dump(alg: LieAlgebra, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize(alg))

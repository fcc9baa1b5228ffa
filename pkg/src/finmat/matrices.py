"""Exact matrices over a scalar context, and the group-input bundle.

A Mat stores raw field values row-major next to its field context.  All
arithmetic is exact; results of multiplications and inversions run through
the blow-up guard, so runaway coefficient growth aborts with
ResourceLimitError instead of stalling.

GroupInput packages generators with their verified inverses and the
denominator data (integer lcm and monic polynomial lcm) that the congruence
constructions must avoid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import limits, mpoly, parse
from .errors import FieldError, SingularMatrixError


class Mat:
    __slots__ = ("field", "n", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(r) for r in rows)
        n = len(rows)
        if n == 0:
            raise FieldError("empty matrix")
        for r in rows:
            if len(r) != n:
                raise FieldError("matrix must be square")
        self.field = field
        self.n = n
        self.rows = rows

    @classmethod
    def identity(cls, field, n: int) -> "Mat":
        z, o = field.zero, field.one
        return cls(field, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def from_strings(cls, field, rows) -> "Mat":
        return cls(field, [[parse.parse_value(s, field) for s in row] for row in rows])

    def to_strings(self):
        F = self.field
        return [[F.to_str(v) for v in row] for row in self.rows]

    def entry(self, i: int, j: int):
        return self.rows[i][j]

    def _guard(self) -> "Mat":
        F = self.field
        worst = 0
        for row in self.rows:
            for v in row:
                b = F.bit_size(v)
                if b > worst:
                    worst = b
        limits.check_size(worst)
        return self

    def __mul__(self, other: "Mat") -> "Mat":
        if not isinstance(other, Mat):
            return NotImplemented
        if self.field != other.field or self.n != other.n:
            raise FieldError("matrix size or field mismatch")
        F = self.field
        n = self.n
        brows = other.rows
        out = []
        for i in range(n):
            arow = self.rows[i]
            row = []
            for j in range(n):
                acc = F.zero
                for k in range(n):
                    x = arow[k]
                    if not F.is_zero(x):
                        acc = F.add(acc, F.mul(x, brows[k][j]))
                row.append(acc)
            out.append(tuple(row))
        return Mat(F, out)._guard()

    def __sub__(self, other: "Mat") -> "Mat":
        if self.field != other.field or self.n != other.n:
            raise FieldError("matrix size or field mismatch")
        F = self.field
        return Mat(
            F,
            tuple(
                tuple(F.sub(x, y) for x, y in zip(r1, r2))
                for r1, r2 in zip(self.rows, other.rows)
            ),
        )

    def inverse(self) -> "Mat":
        F = self.field
        n = self.n
        work = [list(r) + [F.one if i == j else F.zero for j in range(n)] for i, r in enumerate(self.rows)]
        for col in range(n):
            pivot = None
            for r in range(col, n):
                if not F.is_zero(work[r][col]):
                    pivot = r
                    break
            if pivot is None:
                raise SingularMatrixError("matrix is singular")
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
            inv_p = F.inv(work[col][col])
            work[col] = [F.mul(inv_p, v) for v in work[col]]
            for r in range(n):
                if r != col:
                    factor = work[r][col]
                    if not F.is_zero(factor):
                        work[r] = [
                            F.sub(v, F.mul(factor, w))
                            for v, w in zip(work[r], work[col])
                        ]
        return Mat(F, tuple(tuple(row[n:]) for row in work))._guard()

    def __pow__(self, exp: int) -> "Mat":
        base = self
        if exp < 0:
            base = self.inverse()
            exp = -exp
        result = Mat.identity(self.field, self.n)
        while exp:
            if exp & 1:
                result = result * base
            base = base * base if exp > 1 else base
            exp >>= 1
        return result

    def conjugate_by(self, c: "Mat") -> "Mat":
        return c * self * c.inverse()

    def is_identity(self) -> bool:
        F = self.field
        for i, row in enumerate(self.rows):
            for j, v in enumerate(row):
                if i == j:
                    if v != F.one:
                        return False
                elif not F.is_zero(v):
                    return False
        return True

    def is_zero(self) -> bool:
        F = self.field
        return all(F.is_zero(v) for row in self.rows for v in row)

    def map_entries(self, fn, target_field) -> "Mat":
        return Mat(target_field, tuple(tuple(fn(v) for v in row) for row in self.rows))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Mat)
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"Mat({self.to_strings()})"


@dataclass(frozen=True)
class DenominatorClearer:
    """What the congruence maps must not kill: the integer lcm of scalar
    denominators and (function fields) the monic lcm of polynomial ones."""

    integer: int
    poly: object  # mpoly.Polynomial | None


def compute_mu(field, mats) -> DenominatorClearer:
    integer = 1
    poly = None
    for M in mats:
        for row in M.rows:
            for v in row:
                for d in field.int_dens(v):
                    integer = math.lcm(integer, d)
                for dp in field.poly_dens(v):
                    poly = dp if poly is None else mpoly.lcm(poly, dp)
    if poly is None and field.kind == "rational_function":
        poly = field._one_poly
    if poly is None and field.kind == "algebraic_function":
        poly = field.base._one_poly
    return DenominatorClearer(integer=integer, poly=poly)


class GroupInput:
    """Generators of a finitely generated matrix group, with inverses and
    denominator data precomputed."""

    __slots__ = ("field", "n", "gens", "invs", "mu", "label")

    def __init__(self, field, n, gens, invs, mu, label):
        self.field = field
        self.n = n
        self.gens = gens
        self.invs = invs
        self.mu = mu
        self.label = label

    @classmethod
    def build(cls, field, gens, n: int | None = None, label: str | None = None) -> "GroupInput":
        gens = tuple(gens)
        if n is None:
            if not gens:
                raise FieldError("need generators or an explicit degree")
            n = gens[0].n
        invs = []
        for idx, g in enumerate(gens):
            if g.field != field:
                raise FieldError(f"generator {idx + 1} is over a different field")
            if g.n != n:
                raise FieldError(f"generator {idx + 1} has degree {g.n}, expected {n}")
            try:
                invs.append(g.inverse())
            except SingularMatrixError:
                raise FieldError(f"generator {idx + 1} is not invertible") from None
        invs = tuple(invs)
        mu = compute_mu(field, gens + invs)
        return cls(field, n, gens, invs, mu, label)

    def __repr__(self) -> str:
        name = self.label or "group"
        return f"GroupInput({name}: {len(self.gens)} gens, degree {self.n})"

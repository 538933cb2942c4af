"""Linear-code core: self-duality, symmetric standard form, minimum weight.

A :class:`LinearCode` is a full-rank generator matrix over GF(p); a
:class:`SymmetricSD` is the special shape this toolkit revolves around: a
self-dual code with generator (I | A) where A is symmetric and A.A = -I.
Minimum weights come either from exhaustive message enumeration or from
the information-set engine in :mod:`sdcodes.wtenum`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import wtenum
from .exceptions import (
    BudgetExceeded,
    DimensionMismatch,
    FieldMismatch,
    InexactWeight,
    NotSelfDual,
)
from .gf import PrimeField
from .linalg import Matrix, Vector, rref

EXACT = "exact"
LOWER_BOUND = "lower_bound"


@dataclass(frozen=True)
class WeightReport:
    """Outcome of a minimum-weight computation.

    ``min_weight`` is the lightest codeword weight found (the witness
    weight).  With status ``exact`` no nonzero codeword is lighter; with
    status ``lower_bound`` the true minimum lies in
    [bound_value, min_weight].
    """

    min_weight: int
    status: str
    bound_value: int
    witness: Optional[Vector]
    work: int = 0

    @property
    def exact(self) -> bool:
        return self.status == EXACT

    def __post_init__(self) -> None:
        if self.status not in (EXACT, LOWER_BOUND):
            raise ValueError(f"unknown status {self.status!r}")
        if self.exact and self.bound_value != self.min_weight:
            raise ValueError("exact report must have bound_value == min_weight")
        if self.witness is not None and self.witness.weight() != self.min_weight:
            raise ValueError("witness weight does not match min_weight")


class LinearCode:
    """A k-dimensional subspace of GF(p)^n given by a generator matrix."""

    __slots__ = ("field", "generator", "n", "k")

    def __init__(self, generator: Matrix):
        if generator.rows == 0 or generator.cols == 0:
            raise DimensionMismatch("empty codes are not supported")
        if rref(generator).rank != generator.rows:
            raise DimensionMismatch("generator matrix must have full row rank")
        self.field: PrimeField = generator.field
        self.generator = generator
        self.n = generator.cols
        self.k = generator.rows

    @staticmethod
    def from_rows(rows, field: PrimeField) -> "LinearCode":
        return LinearCode(Matrix.make(rows, field))

    def codeword(self, message: Vector) -> Vector:
        return self.generator.vec_mul(message)

    def same_parameters(self, other: "LinearCode") -> bool:
        return (self.field, self.n, self.k) == (other.field, other.n, other.k)

    def __eq__(self, other: object) -> bool:
        """Equality as subspaces (compared via canonical rref)."""
        if not isinstance(other, LinearCode):
            return NotImplemented
        if not self.same_parameters(other):
            return False
        return rref(self.generator).matrix == rref(other.generator).matrix

    def __hash__(self) -> int:
        return hash(rref(self.generator).matrix)

    def __repr__(self) -> str:
        return f"[{self.n},{self.k}] code over {self.field!r}"


class SymmetricSD:
    """Self-dual code in symmetric standard form (I | A), A = A^T, A.A = -I.

    The three defining assertions are each checked at construction and
    never skipped; ``half_n`` is the matrix order n, the code length 2n.
    """

    __slots__ = ("field", "A", "half_n")

    def __init__(self, a: Matrix):
        if a.rows != a.cols:
            raise DimensionMismatch("A must be square")
        self.field: PrimeField = a.field
        self.A = a
        self.half_n = a.rows
        if self.half_n:
            if not a.is_symmetric():
                raise NotSelfDual("A is not symmetric")
            sq = (a @ a).data
            minus_i = (-np.eye(self.half_n, dtype=np.int64)) % self.field.p
            if not np.array_equal(sq, minus_i):
                raise NotSelfDual("A.A != -I")
            g = self.generator_matrix()
            if not ((g @ g.transpose()).is_zero()):
                raise NotSelfDual("G.G^T != 0")

    @staticmethod
    def empty(field: PrimeField) -> "SymmetricSD":
        """Length-0 identity of the direct sum (not a usable code)."""
        return SymmetricSD(Matrix.zeros(0, 0, field))

    @property
    def n(self) -> int:
        return 2 * self.half_n

    def generator_matrix(self) -> Matrix:
        return Matrix.identity(self.half_n, self.field).hstack(self.A)

    def code(self) -> LinearCode:
        if self.half_n == 0:
            raise DimensionMismatch("the empty direct-sum identity is not a code")
        return LinearCode(self.generator_matrix())

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SymmetricSD)
            and other.field == self.field
            and other.A == self.A
        )

    def __hash__(self) -> int:
        return hash(self.A)

    def __repr__(self) -> str:
        return f"SymmetricSD({self.n} = 2x{self.half_n} over {self.field!r})"


def is_self_dual(code: LinearCode) -> bool:
    """k = n/2 and G.G^T = 0."""
    if code.n != 2 * code.k:
        return False
    g = code.generator
    return (g @ g.transpose()).is_zero()


def to_symmetric(code: LinearCode) -> Optional[SymmetricSD]:
    """Read a SymmetricSD off the rref standard form, if it is one.

    No equivalence search happens here: the rref must literally be
    (I | A) with pivots in the first n/2 columns and A symmetric.
    """
    if not is_self_dual(code):
        raise NotSelfDual(f"{code!r} is not self-dual")
    res = rref(code.generator)
    if res.pivots != tuple(range(code.k)):
        return None
    a = Matrix(res.matrix.data[:, code.k :].copy(), code.field)
    if not a.is_symmetric():
        return None
    return SymmetricSD(a)


def direct_sum(c1: SymmetricSD, c2: SymmetricSD) -> SymmetricSD:
    """Block-diagonal sum; symmetric self-dual of length 2(l+m)."""
    if c1.field != c2.field:
        raise FieldMismatch("direct sum needs a common field")
    l, m = c1.half_n, c2.half_n
    out = np.zeros((l + m, l + m), dtype=np.int64)
    out[:l, :l] = c1.A.data
    out[l:, l:] = c2.A.data
    return SymmetricSD(Matrix(out, c1.field))


def _report_from_engine(code: LinearCode, out: wtenum.EngineOutcome) -> WeightReport:
    witness = (
        Vector(tuple(int(v) for v in out.witness), code.field)
        if out.witness is not None
        else None
    )
    if out.exact:
        d = out.best_weight
        assert d <= code.n - code.k + 1, "Singleton bound violated"
        return WeightReport(d, EXACT, d, witness, out.work)
    return WeightReport(out.best_weight, LOWER_BOUND, out.lower_bound, witness, out.work)


def min_weight_exhaustive(
    code: LinearCode, budget: int = wtenum.EXHAUSTIVE_BUDGET_DEFAULT
) -> WeightReport:
    """Exact minimum weight by enumerating every nonzero message.

    Raises BudgetExceeded when p^k exceeds ``budget``.
    """
    d, word, work = wtenum.exhaustive_search(code.generator.data, code.field.p, budget)
    assert d <= code.n - code.k + 1, "Singleton bound violated"
    witness = Vector(tuple(int(v) for v in word), code.field)
    return WeightReport(d, EXACT, d, witness, work)


def min_weight(
    code: LinearCode,
    budget: int = wtenum.DEFAULT_WORK_BUDGET,
    *,
    seed: int = 0,
    witness_target: Optional[int] = None,
    bound_target: Optional[int] = None,
) -> WeightReport:
    """Minimum weight via information-set rounds under a work budget.

    Terminates exact when the accumulated lower bound reaches the best
    witness; budget exhaustion degrades the status to lower_bound, never
    errors.  ``witness_target``/``bound_target`` allow the tiered calls:
    hunt a codeword of the target weight first, then stop bounding at
    ``bound_target`` instead of pushing for exactness.
    """
    engine = wtenum.InformationSetEngine(code.generator.data, code.field.p)
    out = engine.run(
        budget=budget,
        seed=seed,
        witness_target=witness_target,
        bound_target=bound_target,
    )
    return _report_from_engine(code, out)


def is_mds(code: LinearCode, report: WeightReport) -> bool:
    """d = n - k + 1 (Singleton bound met).  Requires an exact report."""
    if not report.exact:
        raise InexactWeight("MDS check needs an exact minimum weight")
    return report.min_weight == code.n - code.k + 1

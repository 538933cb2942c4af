"""Dense vectors and matrices over GF(p).

Everything here is an immutable wrapper around a small numpy integer array
(all instances in this toolkit are at most about 20x20).  Reduced row
echelon form uses the first nonzero entry in scan order as pivot, and
kernel bases are read off the free columns in ascending order, so repeated
runs produce identical bases.

Orientation convention: a :class:`Vector` is one-dimensional.  In the
building-up context it plays the row vector x; eigenvectors are the columns
x^T.  ``dot(x, y)`` is the scalar x.y^T and ``outer(x, y)`` the matrix
x^T.y; use these names rather than juggling transposes.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Sequence

import numpy as np

from .exceptions import DimensionMismatch, FieldMismatch
from .gf import FieldElement, PrimeField


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Vector:
    """Immutable vector with canonical entries in [0, p)."""

    entries: tuple[int, ...]
    field: PrimeField

    @staticmethod
    def make(entries: Iterable[int], field: PrimeField) -> "Vector":
        return Vector(tuple(int(e) % field.p for e in entries), field)

    @staticmethod
    def zero(length: int, field: PrimeField) -> "Vector":
        return Vector((0,) * length, field)

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def is_zero(self) -> bool:
        return all(e == 0 for e in self.entries)

    def weight(self) -> int:
        return sum(1 for e in self.entries if e != 0)

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def scale(self, c: int) -> "Vector":
        return Vector.make((c * e for e in self.entries), self.field)

    def __add__(self, other: "Vector") -> "Vector":
        self._compatible(other)
        return Vector.make(
            (a + b for a, b in zip(self.entries, other.entries)), self.field
        )

    def __sub__(self, other: "Vector") -> "Vector":
        self._compatible(other)
        return Vector.make(
            (a - b for a, b in zip(self.entries, other.entries)), self.field
        )

    def __neg__(self) -> "Vector":
        return self.scale(-1)

    def _compatible(self, other: "Vector") -> None:
        if self.field != other.field:
            raise FieldMismatch("vectors over different fields")
        if len(self) != len(other):
            raise DimensionMismatch(f"length {len(self)} vs {len(other)}")

    def __repr__(self) -> str:
        return f"Vector({list(self.entries)} over {self.field!r})"


def dot(x: Vector, y: Vector) -> FieldElement:
    """Scalar product x.y^T."""
    x._compatible(y)
    total = sum(a * b for a, b in zip(x.entries, y.entries))
    return x.field.element(total)


def outer(x: Vector, y: Vector) -> "Matrix":
    """Rank-one matrix x^T.y."""
    if x.field != y.field:
        raise FieldMismatch("vectors over different fields")
    p = x.field.p
    data = np.outer(x.as_array(), y.as_array()) % p
    return Matrix(_frozen(data), x.field)


class Matrix:
    """Immutable row-major matrix over GF(p)."""

    __slots__ = ("data", "field")

    def __init__(self, data: np.ndarray, field: PrimeField):
        arr = np.asarray(data, dtype=np.int64) % field.p
        if arr.ndim != 2:
            raise DimensionMismatch("matrix data must be two-dimensional")
        self.data = _frozen(arr)
        self.field = field

    @staticmethod
    def make(rows: Sequence[Sequence[int]], field: PrimeField) -> "Matrix":
        return Matrix(np.array(rows, dtype=np.int64).reshape(len(rows), -1), field)

    @staticmethod
    def identity(n: int, field: PrimeField) -> "Matrix":
        return Matrix(np.eye(n, dtype=np.int64), field)

    @staticmethod
    def zeros(rows: int, cols: int, field: PrimeField) -> "Matrix":
        return Matrix(np.zeros((rows, cols), dtype=np.int64), field)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def entry(self, i: int, j: int) -> int:
        return int(self.data[i, j])

    def row(self, i: int) -> Vector:
        return Vector(tuple(int(v) for v in self.data[i]), self.field)

    def col(self, j: int) -> Vector:
        return Vector(tuple(int(v) for v in self.data[:, j]), self.field)

    def transpose(self) -> "Matrix":
        return Matrix(self.data.T.copy(), self.field)

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.data, self.data.T))

    def is_zero(self) -> bool:
        return not self.data.any()

    def __add__(self, other: "Matrix") -> "Matrix":
        self._compatible(other, same_shape=True)
        return Matrix(self.data + other.data, self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._compatible(other, same_shape=True)
        return Matrix(self.data - other.data, self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(-self.data, self.field)

    def scale(self, c: int) -> "Matrix":
        return Matrix(self.data * (c % self.field.p), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._compatible(other)
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        return Matrix(self.data @ other.data, self.field)

    def mul_vec(self, v: Vector) -> Vector:
        """A.x^T: consumes and returns a column."""
        if v.field != self.field:
            raise FieldMismatch("vector over a different field")
        if len(v) != self.cols:
            raise DimensionMismatch(f"matrix has {self.cols} cols, vector length {len(v)}")
        out = (self.data @ v.as_array()) % self.field.p
        return Vector(tuple(int(x) for x in out), self.field)

    def vec_mul(self, v: Vector) -> Vector:
        """x.A: consumes and returns a row."""
        if v.field != self.field:
            raise FieldMismatch("vector over a different field")
        if len(v) != self.rows:
            raise DimensionMismatch(f"matrix has {self.rows} rows, vector length {len(v)}")
        out = (v.as_array() @ self.data) % self.field.p
        return Vector(tuple(int(x) for x in out), self.field)

    def hstack(self, other: "Matrix") -> "Matrix":
        self._compatible(other)
        return Matrix(np.hstack([self.data, other.data]), self.field)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix(self.data[np.ix_(rows, cols)].copy(), self.field)

    def _compatible(self, other: "Matrix", same_shape: bool = False) -> None:
        if self.field != other.field:
            raise FieldMismatch("matrices over different fields")
        if same_shape and self.data.shape != other.data.shape:
            raise DimensionMismatch(f"{self.data.shape} vs {other.data.shape}")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Matrix)
            and other.field == self.field
            and np.array_equal(other.data, self.data)
        )

    def __hash__(self) -> int:
        return hash((self.field.p, self.data.shape, self.data.tobytes()))

    def key(self) -> tuple:
        """Hashable content key (for set-equality tests)."""
        return (self.field.p, tuple(map(tuple, self.data.tolist())))

    def __repr__(self) -> str:
        body = "\n".join(" ".join(f"{v:>3}" for v in row) for row in self.data.tolist())
        return f"Matrix over {self.field!r}:\n{body}"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


@dataclass(frozen=True)
class RrefResult:
    matrix: "Matrix"
    pivots: tuple[int, ...]
    rank: int = dc_field(init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "rank", len(self.pivots))


def rref(m: Matrix, col_order: Sequence[int] | None = None) -> RrefResult:
    """Reduced row echelon form with deterministic pivoting.

    ``col_order`` optionally re-prioritises the column scan (used when
    systematising a generator matrix on a chosen information set); the
    returned matrix keeps the original column layout.
    """
    p = m.field.p
    a = m.data.copy()
    rows, cols = a.shape
    order = list(col_order) if col_order is not None else list(range(cols))
    pivots: list[int] = []
    r = 0
    for c in order:
        if r >= rows:
            break
        pivot_row = None
        for i in range(r, rows):
            if a[i, c] % p:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        if pivot_row != r:
            a[[r, pivot_row]] = a[[pivot_row, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        for i in range(rows):
            if i != r and a[i, c]:
                a[i] = (a[i] - a[i, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return RrefResult(Matrix(a, m.field), tuple(pivots))


def kernel(m: Matrix) -> list[Vector]:
    """Deterministic basis of the right null space {v : M.v = 0}.

    One basis vector per free column, taken in ascending column order.
    """
    res = rref(m)
    p = m.field.p
    red = res.matrix.data
    pivot_set = set(res.pivots)
    basis: list[Vector] = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        v = [0] * m.cols
        v[f] = 1
        for r_idx, pc in enumerate(res.pivots):
            v[pc] = (-int(red[r_idx, f])) % p
        basis.append(Vector(tuple(v), m.field))
    return basis


def eigenspace(a: Matrix, lam: FieldElement | int) -> list[Vector]:
    """Basis of ker(A - lambda.I); every v satisfies A.v = lambda.v."""
    if a.rows != a.cols:
        raise DimensionMismatch("eigenspace needs a square matrix")
    lam_val = int(lam) % a.field.p
    shifted = a - Matrix.identity(a.rows, a.field).scale(lam_val)
    basis = kernel(shifted)
    for v in basis:
        assert a.mul_vec(v) == v.scale(lam_val)
    return basis


def block2x2(a: FieldElement | int, x: Vector, b: Matrix) -> Matrix:
    """Bordered matrix [[a, x], [x^T, B]] of size (n+1)x(n+1)."""
    if b.rows != b.cols:
        raise DimensionMismatch("lower-right block must be square")
    if len(x) != b.rows:
        raise DimensionMismatch(f"border length {len(x)} vs block size {b.rows}")
    if x.field != b.field:
        raise FieldMismatch("border vector over a different field")
    n = b.rows
    out = np.zeros((n + 1, n + 1), dtype=np.int64)
    out[0, 0] = int(a) % b.field.p
    out[0, 1:] = x.as_array()
    out[1:, 0] = x.as_array()
    out[1:, 1:] = b.data
    return Matrix(out, b.field)

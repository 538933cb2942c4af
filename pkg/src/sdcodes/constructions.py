"""Double circulant and (extended) quadratic residue constructions.

Circulant generators (I | A) and their bordered variant feed the search
for symmetric self-dual codes: reversing the columns of a circulant block
makes it symmetric, so every self-dual double circulant code is
monomially equivalent to a symmetric one.

The quadratic residue construction builds the cyclic code of prime length
ell whose generator polynomial has the residue powers of an ell-th root
of unity as roots, then appends one parity coordinate.  The border is a
single scalar weighting of each row sum; all p candidates are scanned and
the smallest one giving a self-dual code wins.  When none exists the code
is returned flagged as an iso-dual candidate with the conventional
sum-zero extension (border -1).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .code import LinearCode, is_self_dual
from .exceptions import CoefficientNotInBaseField, DimensionMismatch, NotAResidue
from .gf import (
    ExtFieldElement,
    FieldElement,
    PrimeField,
    Polynomial,
    _is_prime,
    multiplicative_order_mod,
    primitive_root_of_unity,
)
from .linalg import Matrix, Vector


@dataclass(frozen=True)
class CirculantSpec:
    """First row of the circulant block, plus optional (alpha, beta) border."""

    first_row: Vector
    bordered: Optional[tuple[FieldElement, FieldElement]] = None


def circulant(first_row: Vector) -> Matrix:
    """n x n matrix whose i-th row is the first row shifted right by i."""
    n = len(first_row)
    base = np.array(first_row.entries, dtype=np.int64)
    rows = [np.roll(base, i) for i in range(n)]
    return Matrix(np.stack(rows), first_row.field)


def double_circulant_code(spec: CirculantSpec) -> LinearCode:
    """(I | A) pure form, or the bordered form with corner alpha and beta
    borders around an (n-1)-circulant.  Self-duality is not guaranteed;
    the caller checks."""
    f = spec.first_row.field
    a = circulant(spec.first_row)
    if spec.bordered is None:
        right = a
    else:
        alpha, beta = spec.bordered
        m = len(spec.first_row)
        out = np.zeros((m + 1, m + 1), dtype=np.int64)
        out[0, 0] = alpha.value
        out[0, 1:] = beta.value
        out[1:, 0] = beta.value
        out[1:, 1:] = a.data
        right = Matrix(out, f)
    gen = Matrix.identity(right.rows, f).hstack(right)
    return LinearCode(gen)


@dataclass(frozen=True)
class QRSpec:
    """Parameters of a quadratic residue code of prime length ell over GF(p).

    Valid only when p is a nonzero square mod ell.
    """

    ell: int
    field: PrimeField

    def __post_init__(self) -> None:
        if not _is_prime(self.ell) or self.ell == 2:
            raise ValueError(f"ell must be an odd prime, got {self.ell}")
        if self.field.p % self.ell == 0:
            raise NotAResidue("p must be coprime to ell")
        if (self.field.p % self.ell) not in self.residues:
            raise NotAResidue(f"{self.field.p} is not a square mod {self.ell}")

    @property
    def residues(self) -> frozenset[int]:
        return frozenset((i * i) % self.ell for i in range(1, self.ell))


def qr_generator_polynomial(spec: QRSpec) -> tuple[Polynomial, ExtFieldElement]:
    """g(x) = prod over residues r of (x - zeta^r), certified over GF(p).

    Returns the base-field polynomial and the root of unity used.
    """
    f = spec.field
    zeta = primitive_root_of_unity(spec.ell, f)
    ext = zeta.field
    g = [ext.one()]  # coefficients over the extension, lowest first
    for r in sorted(spec.residues):
        root = zeta**r
        # multiply by (x - root)
        nxt = [ext.zero()] * (len(g) + 1)
        for i, c in enumerate(g):
            nxt[i + 1] = nxt[i + 1] + c
            nxt[i] = nxt[i] - c * root
        g = nxt
    base_coeffs = []
    for c in g:
        v = c.in_base_field()
        if v is None:
            raise CoefficientNotInBaseField(
                "generator-polynomial coefficient has extension degree > 0"
            )
        base_coeffs.append(v)
    poly = Polynomial.make(base_coeffs, f)
    assert poly.degree == (spec.ell - 1) // 2
    return poly, zeta


def qr_cyclic(spec: QRSpec) -> LinearCode:
    """Cyclic [ell, (ell+1)/2] code generated by the residue polynomial."""
    f = spec.field
    g, _ = qr_generator_polynomial(spec)
    # g divides x^ell - 1 by construction; assert it anyway
    modulus = Polynomial.make([-1] + [0] * (spec.ell - 1) + [1], f)
    assert (modulus % g).is_zero(), "g(x) does not divide x^ell - 1"
    k = spec.ell - g.degree
    rows = np.zeros((k, spec.ell), dtype=np.int64)
    coeffs = list(g.coeffs)
    for i in range(k):
        rows[i, i : i + len(coeffs)] = coeffs
    return LinearCode(Matrix(rows, f))


@dataclass(frozen=True)
class QRExtended:
    """Extended QR code plus the outcome of the self-duality border solve."""

    code: LinearCode
    self_dual: bool
    border: FieldElement  # row extension is border * (row sum)

    @property
    def iso_dual_candidate(self) -> bool:
        return not self.self_dual


def qr_extended(spec: QRSpec) -> QRExtended:
    """Append one coordinate to the cyclic QR code.

    Each generator row r gains the entry s * sum(r); s is found by
    scanning all field scalars for G'.G'^T = 0 (p is tiny).  If no scalar
    works the code cannot be linearly extended to a self-dual one this
    way and the customary sum-zero extension s = -1 is returned, flagged.
    """
    f = spec.field
    cyclic = qr_cyclic(spec)
    gen = cyclic.generator.data
    sums = gen.sum(axis=1) % f.p

    def extended_with(s: int) -> LinearCode:
        border_col = (s * sums) % f.p
        data = np.hstack([gen, border_col.reshape(-1, 1)])
        return LinearCode(Matrix(data, f))

    for s in range(f.p):
        cand = extended_with(s)
        if is_self_dual(cand):
            return QRExtended(cand, True, f.element(s))
    return QRExtended(extended_with(f.p - 1), False, f.element(f.p - 1))


def qr_extension_degree(spec: QRSpec) -> int:
    """Degree m of the splitting field GF(p^m) hosting the root of unity."""
    return multiplicative_order_mod(spec.field.p, spec.ell)

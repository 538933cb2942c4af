"""Arithmetic over prime fields GF(p) and small extension fields GF(p^m).

The prime-field layer carries the scalar machinery the rest of the toolkit
relies on: canonical residues, square roots, quadratic-residue tests and the
two roots of -1 (which exist exactly when p = 1 mod 4).  The extension-field
layer exists only to host roots of unity for quadratic-residue generator
polynomials; it is deliberately minimal.

All values are immutable; every operation is pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .exceptions import NoRootOfMinusOne

_SQRT_TABLE_LIMIT = 1 << 16  # below this, square roots come from a scan


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@lru_cache(maxsize=None)
def GF(p: int) -> "PrimeField":
    """Return the (cached) prime field with modulus p."""
    return PrimeField(p)


class PrimeField:
    """The field of integers modulo an odd prime p.

    Elements are canonical residues in [0, p).  Use :meth:`element` to wrap
    a residue into a :class:`FieldElement`, or work with plain ints through
    the ``add``/``mul``/... helpers.
    """

    __slots__ = ("p", "is_one_mod_four", "_sqrt_table")

    def __init__(self, p: int):
        if p < 3 or not _is_prime(p):
            raise ValueError(f"modulus must be an odd prime >= 3, got {p}")
        self.p = p
        self.is_one_mod_four = p % 4 == 1
        self._sqrt_table: Optional[dict[int, int]] = None

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    # -- scalar arithmetic on canonical residues ------------------------

    def element(self, value: int) -> "FieldElement":
        return FieldElement(value % self.p, self)

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return pow(self.inv(a), -e, self.p)
        return pow(a % self.p, e, self.p)

    def is_nonzero_square(self, a: int) -> bool:
        """Euler criterion: a is a quadratic residue and a != 0."""
        a %= self.p
        if a == 0:
            return False
        return pow(a, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, a: int) -> Optional[int]:
        """Smaller square root of a, or None when a is a non-square.

        Roots come in pairs {r, p-r}; returning min(r, p-r) keeps every
        run reproducible.  0 maps to 0.
        """
        a %= self.p
        if a == 0:
            return 0
        if self.p < _SQRT_TABLE_LIMIT:
            if self._sqrt_table is None:
                table: dict[int, int] = {}
                for r in range(self.p - 1, 0, -1):
                    table[(r * r) % self.p] = r  # later (smaller) r wins
                self._sqrt_table = table
            return self._sqrt_table.get(a)
        if not self.is_nonzero_square(a):
            return None
        r = self._tonelli_shanks(a)
        return min(r, self.p - r)

    def _tonelli_shanks(self, a: int) -> int:
        p = self.p
        if p % 4 == 3:
            return pow(a, (p + 1) // 4, p)
        # write p-1 = q * 2^s with q odd
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = 2
        while self.is_nonzero_square(z):
            z += 1
        m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = (t2 * t2) % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m, c = i, (b * b) % p
            t, r = (t * c) % p, (r * b) % p
        return r

    def roots_of_minus_one(self) -> tuple["FieldElement", "FieldElement"]:
        """Both solutions of x^2 = -1, smaller residue first."""
        if not self.is_one_mod_four:
            raise NoRootOfMinusOne(f"-1 is not a square in {self!r}")
        r = self.sqrt(self.p - 1)
        assert r is not None
        return self.element(r), self.element(self.p - r)


@dataclass(frozen=True)
class FieldElement:
    """A canonical residue together with its field."""

    value: int
    field: PrimeField

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.field.p)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.field.p})"

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other.value
        return int(other) % self.field.p

    def __add__(self, other) -> "FieldElement":
        return FieldElement(self.value + self._coerce(other), self.field)

    def __sub__(self, other) -> "FieldElement":
        return FieldElement(self.value - self._coerce(other), self.field)

    def __mul__(self, other) -> "FieldElement":
        return FieldElement(self.value * self._coerce(other), self.field)

    def __neg__(self) -> "FieldElement":
        return FieldElement(-self.value, self.field)

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field.pow(self.value, e), self.field)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field.inv(self.value), self.field)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.p))


def roots_of_minus_one(field: PrimeField) -> tuple[FieldElement, FieldElement]:
    """Module-level alias for :meth:`PrimeField.roots_of_minus_one`."""
    return field.roots_of_minus_one()


def sqrt(a: FieldElement) -> Optional[FieldElement]:
    """Smaller square root of a field element, or None."""
    r = a.field.sqrt(a.value)
    return None if r is None else a.field.element(r)


def is_nonzero_square(a: FieldElement) -> bool:
    return a.field.is_nonzero_square(a.value)


# ----------------------------------------------------------------------
# Polynomials over GF(p), lowest-degree coefficient first.
# ----------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial over GF(p); coefficients lowest degree first.

    The zero polynomial has an empty coefficient tuple and degree -1.
    Leading coefficient is always nonzero otherwise.
    """

    coeffs: tuple[int, ...]
    field: PrimeField

    @staticmethod
    def make(coeffs, field: PrimeField) -> "Polynomial":
        cs = [c % field.p for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return Polynomial(tuple(cs), field)

    @staticmethod
    def x_power(e: int, field: PrimeField) -> "Polynomial":
        return Polynomial.make([0] * e + [1], field)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Polynomial.make([x + y for x, y in zip(a, b)], self.field)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Polynomial.make([x - y for x, y in zip(a, b)], self.field)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial((), self.field)
        p = self.field.p
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = (out[i + j] + a * b) % p
        return Polynomial.make(out, self.field)

    def scale(self, c: int) -> "Polynomial":
        return Polynomial.make([c * a for a in self.coeffs], self.field)

    def divmod(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        p = self.field.p
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return Polynomial((), self.field), self
        quot = [0] * (dq + 1)
        lead_inv = self.field.inv(other.coeffs[-1])
        for i in range(dq, -1, -1):
            c = (rem[i + other.degree] * lead_inv) % p
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return Polynomial.make(quot, self.field), Polynomial.make(rem, self.field)

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return self.divmod(other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.is_monic():
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def gcd(self, other: "Polynomial") -> "Polynomial":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * x + c) % self.field.p
        return acc

    def pow_mod(self, e: int, modulus: "Polynomial") -> "Polynomial":
        result = Polynomial.make([1], self.field)
        base = self % modulus
        while e:
            if e & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            e >>= 1
        return result

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return " + ".join(terms)


def _monic_polys(field: PrimeField, m: int) -> Iterator[Polynomial]:
    """All monic degree-m polynomials, low coefficients counted first."""
    p = field.p
    for n in range(p**m):
        coeffs = []
        t = n
        for _ in range(m):
            coeffs.append(t % p)
            t //= p
        coeffs.append(1)
        yield Polynomial.make(coeffs, field)


def is_irreducible(f: Polynomial) -> bool:
    """Standard divisibility test: f (degree m) is irreducible iff
    x^(p^m) = x mod f and gcd(x^(p^(m/r)) - x, f) = 1 for prime r | m."""
    m = f.degree
    if m <= 0:
        return False
    field = f.field
    p = field.p
    if m == 1:
        return True
    x = Polynomial.x_power(1, field)
    if x.pow_mod(p**m, f) != x % f:
        return False
    r = 2
    mm = m
    prime_divisors = []
    while r * r <= mm:
        if mm % r == 0:
            prime_divisors.append(r)
            while mm % r == 0:
                mm //= r
        r += 1
    if mm > 1:
        prime_divisors.append(mm)
    one = Polynomial.make([1], field)
    for r in prime_divisors:
        g = (x.pow_mod(p ** (m // r), f) - x).gcd(f)
        if g != one:
            return False
    return True


def find_irreducible(field: PrimeField, m: int) -> Polynomial:
    """Lexicographically first monic irreducible of degree m over GF(p)."""
    if m < 1:
        raise ValueError("extension degree must be >= 1")
    for f in _monic_polys(field, m):
        if is_irreducible(f):
            return f
    raise AssertionError("unreachable: irreducibles of every degree exist")


# ----------------------------------------------------------------------
# GF(p^m) as GF(p)[x] / (modulus)
# ----------------------------------------------------------------------


class ExtField:
    """GF(p^m) built over a fixed irreducible modulus of degree m."""

    __slots__ = ("base", "m", "modulus")

    def __init__(self, base: PrimeField, m: int, modulus: Optional[Polynomial] = None):
        self.base = base
        self.m = m
        self.modulus = modulus if modulus is not None else find_irreducible(base, m)
        if self.modulus.degree != m or not self.modulus.is_monic():
            raise ValueError("modulus must be monic of degree m")

    @property
    def order(self) -> int:
        return self.base.p**self.m

    def element(self, poly: Polynomial) -> "ExtFieldElement":
        return ExtFieldElement(poly % self.modulus, self)

    def from_int(self, c: int) -> "ExtFieldElement":
        return self.element(Polynomial.make([c], self.base))

    def zero(self) -> "ExtFieldElement":
        return self.from_int(0)

    def one(self) -> "ExtFieldElement":
        return self.from_int(1)

    def elements(self) -> Iterator["ExtFieldElement"]:
        """All field elements, coefficient tuples in ascending order."""
        p = self.base.p
        for n in range(self.order):
            coeffs = []
            t = n
            for _ in range(self.m):
                coeffs.append(t % p)
                t //= p
            yield self.element(Polynomial.make(coeffs, self.base))

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ExtField)
            and other.base == self.base
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash(("ExtField", self.base.p, self.modulus.coeffs))

    def __repr__(self) -> str:
        return f"GF({self.base.p}^{self.m})"


@dataclass(frozen=True)
class ExtFieldElement:
    """Residue polynomial of degree < m over the base field."""

    representation: Polynomial
    field: ExtField

    def _check(self, other: "ExtFieldElement") -> None:
        if other.field != self.field:
            raise ValueError("extension field mismatch")

    def __add__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check(other)
        return ExtFieldElement(self.representation + other.representation, self.field)

    def __sub__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check(other)
        return ExtFieldElement(self.representation - other.representation, self.field)

    def __mul__(self, other: "ExtFieldElement") -> "ExtFieldElement":
        self._check(other)
        return ExtFieldElement(
            (self.representation * other.representation) % self.field.modulus,
            self.field,
        )

    def __pow__(self, e: int) -> "ExtFieldElement":
        if e < 0:
            return self.inverse() ** (-e)
        return ExtFieldElement(
            self.representation.pow_mod(e, self.field.modulus), self.field
        )

    def inverse(self) -> "ExtFieldElement":
        # extended Euclid in GF(p)[x]
        if self.is_zero():
            raise ZeroDivisionError("inverse of 0")
        a, b = self.field.modulus, self.representation
        one = Polynomial.make([1], self.field.base)
        zero = Polynomial((), self.field.base)
        s0, s1 = zero, one
        while not b.is_zero():
            q, r = a.divmod(b)
            a, b = b, r
            s0, s1 = s1, s0 - q * s1
        # a = gcd (a constant); scale s0 so that s0 * self = 1
        c_inv = self.field.base.inv(a.coeffs[0])
        return ExtFieldElement(s0.scale(c_inv) % self.field.modulus, self.field)

    def is_zero(self) -> bool:
        return self.representation.is_zero()

    def is_one(self) -> bool:
        return self.representation == Polynomial.make([1], self.field.base)

    def in_base_field(self) -> Optional[int]:
        """The base-field value when degree < 1, else None."""
        if self.representation.degree > 0:
            return None
        if self.representation.is_zero():
            return 0
        return self.representation.coeffs[0]

    def coeff_tuple(self) -> tuple[int, ...]:
        """Length-m coefficient tuple (used for deterministic ordering)."""
        cs = list(self.representation.coeffs)
        return tuple(cs + [0] * (self.field.m - len(cs)))

    def __repr__(self) -> str:
        return f"({self.representation!r}) in {self.field!r}"


def multiplicative_order_mod(a: int, n: int) -> int:
    """Order of a in (Z/nZ)*; requires gcd(a, n) = 1."""
    a %= n
    if a == 0:
        raise ValueError("0 has no multiplicative order")
    k, x = 1, a
    while x != 1:
        x = (x * a) % n
        k += 1
    return k


def primitive_root_of_unity(ell: int, field: PrimeField) -> ExtFieldElement:
    """An element of multiplicative order exactly ell in GF(p^m), m = ord_ell(p).

    Among the ell-1 elements of order ell, the one with the
    lexicographically smallest coefficient tuple is returned, so the
    construction is deterministic.
    """
    if not _is_prime(ell) or ell == 2:
        raise ValueError(f"ell must be an odd prime, got {ell}")
    if field.p % ell == 0:
        raise ValueError("ell must be coprime to the field characteristic")
    m = multiplicative_order_mod(field.p, ell)
    ext = ExtField(field, m)
    cofactor = (ext.order - 1) // ell
    zeta = None
    for cand in ext.elements():
        if cand.is_zero():
            continue
        u = cand**cofactor
        if not u.is_one():
            zeta = u  # order divides the prime ell and is not 1, so it is ell
            break
    assert zeta is not None
    best = min((zeta**i for i in range(1, ell)), key=lambda z: z.coeff_tuple())
    return best

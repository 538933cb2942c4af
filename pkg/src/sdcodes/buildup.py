"""Symmetric building-up construction, its inverse reduction, and chain search.

One step borders a symmetric self-dual (I | A) of length 2n with a corner
element gamma and an eigenvector row x of A (eigenvalue alpha, a root of
-1), producing

    A' = [[gamma, x], [x^T, A + beta.x^T.x]],   beta = (gamma - alpha)^-1,

which is again symmetric self-dual, of length 2n+2.  The degenerate step
x = 0 is the direct sum with the length-2 code (1 | alpha) and carries
gamma = alpha by convention.  Reduction splits off the first row/column
and subtracts beta.x^T.x back out; it inverts extension bit-exactly.

A note on admissibility: steps with x.x + 1 = 0 (gamma = 0) are accepted.
The corner equation gamma^2 = -1 - x.x only needs -1 - x.x to be a
square, possibly zero, and rejecting the zero case would lose real codes
(completeness at length 4 over GF(5) already requires it).
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterator, Optional, Union

import numpy as np

from .code import SymmetricSD, WeightReport, direct_sum, min_weight
from .exceptions import (
    AlphaEqualsGamma,
    DimensionMismatch,
    FieldMismatch,
    GammaEqualsAlpha,
    GammaMismatch,
    NotAnEigenvector,
    NotNonzeroSquare,
)
from .gf import FieldElement, PrimeField
from .linalg import Matrix, Vector, block2x2, dot, eigenspace, outer


@dataclass(frozen=True)
class BuildStep:
    """One application of the building-up construction: (alpha, gamma, x)."""

    alpha: FieldElement
    gamma: FieldElement
    x: Vector

    @staticmethod
    def make(alpha: int, gamma: int, x, field: PrimeField) -> "BuildStep":
        return BuildStep(field.element(alpha), field.element(gamma), Vector.make(x, field))

    @staticmethod
    def trivial(alpha: FieldElement, length: int) -> "BuildStep":
        return BuildStep(alpha, alpha, Vector.zero(length, alpha.field))

    @property
    def field(self) -> PrimeField:
        return self.alpha.field

    def is_trivial(self) -> bool:
        return self.x.is_zero()

    def validate(self) -> None:
        """Check the step invariants; raises the specific violation."""
        f = self.field
        if self.gamma.field != f or self.x.field != f:
            raise FieldMismatch("step components over different fields")
        if (self.alpha * self.alpha).value != f.p - 1:
            raise ValueError(f"alpha = {self.alpha!r} is not a root of -1")
        if self.is_trivial():
            if self.gamma != self.alpha:
                raise GammaMismatch("the x = 0 step must carry gamma = alpha")
            return
        s = dot(self.x, self.x)
        disc = -(s + 1)  # gamma^2 must equal this
        if (s + 1).value != 0 and not f.is_nonzero_square((s + 1).value):
            raise NotNonzeroSquare(f"x.x + 1 = {(s + 1).value} is not a square mod {f.p}")
        if self.gamma * self.gamma != disc:
            raise GammaMismatch(
                f"gamma^2 = {(self.gamma * self.gamma).value} != -1 - x.x = {disc.value}"
            )
        if self.gamma == self.alpha:
            raise GammaEqualsAlpha("gamma = alpha is only allowed for the x = 0 step")

    def beta(self) -> FieldElement:
        return (self.gamma - self.alpha).inverse()

    def key(self) -> tuple:
        """Deterministic tie-break order: by (gamma, x)."""
        return (self.gamma.value, self.x.entries)


def extend(c: SymmetricSD, step: BuildStep) -> SymmetricSD:
    """Length 2n -> 2n+2.  The result re-checks all SymmetricSD assertions."""
    if step.field != c.field:
        raise FieldMismatch("step over a different field")
    if len(step.x) != c.half_n:
        raise DimensionMismatch(f"x has length {len(step.x)}, expected {c.half_n}")
    step.validate()
    if step.is_trivial():
        corner = SymmetricSD(Matrix.make([[step.alpha.value]], c.field))
        return direct_sum(corner, c)
    if c.A.mul_vec(step.x) != step.x.scale(step.alpha.value):
        raise NotAnEigenvector(
            f"x is not an eigenvector of A for eigenvalue {step.alpha.value}"
        )
    beta = step.beta()
    e = outer(step.x, step.x).scale(beta.value)
    if __debug__:
        f = c.field
        x_arr = step.x.as_array()
        # block identities from the extension algebra:
        #   gamma.x + x.A^T + x.E^T = 0
        top = (step.gamma.value * x_arr + x_arr @ c.A.data.T + x_arr @ e.data.T) % f.p
        assert not top.any(), "(1,2) block identity failed"
        #   x^T.x + 2.alpha.beta.x^T.x + E.E^T = 0
        xtx = np.outer(x_arr, x_arr)
        resid = (xtx + 2 * step.alpha.value * beta.value * xtx + e.data @ e.data.T) % f.p
        assert not resid.any(), "(2,2) block identity failed"
    return SymmetricSD(block2x2(step.gamma, step.x, c.A + e))


def reduce(c: SymmetricSD, alpha: FieldElement) -> tuple[SymmetricSD, BuildStep]:
    """Split off the first coordinate pair; inverse of :func:`extend`.

    The corner entry of A is read as gamma and the rest of its first row
    as x.  For x != 0 the caller must supply a root of -1 different from
    gamma (AlphaEqualsGamma otherwise); for x = 0 the returned trivial
    step carries alpha = gamma regardless of the argument, so that
    extending reproduces the corner bit-exactly.
    """
    if c.half_n < 2:
        raise DimensionMismatch("reduction needs half-length >= 2")
    gamma = c.field.element(c.A.entry(0, 0))
    x = Vector(tuple(c.A.data[0, 1:].tolist()), c.field)
    b = Matrix(c.A.data[1:, 1:].copy(), c.field)
    if x.is_zero():
        return SymmetricSD(b), BuildStep.trivial(gamma, len(x))
    if alpha == gamma:
        raise AlphaEqualsGamma("pick the other root of -1: alpha = corner gamma")
    if (alpha * alpha).value != c.field.p - 1:
        raise ValueError(f"alpha = {alpha!r} is not a root of -1")
    beta = (gamma - alpha).inverse()
    a = b - outer(x, x).scale(beta.value)
    reduced = SymmetricSD(a)
    step = BuildStep(alpha, gamma, x)
    assert reduced.A.mul_vec(x) == x.scale(alpha.value)
    return reduced, step


def eigen_candidates(c: SymmetricSD, alpha: FieldElement) -> list[Vector]:
    """Basis of the alpha-eigenspace of A (may be empty; then use -alpha)."""
    if (alpha * alpha).value != c.field.p - 1:
        raise ValueError(f"alpha = {alpha!r} is not a root of -1")
    return eigenspace(c.A, alpha)


@dataclass(frozen=True)
class Sample:
    """Seeded sampling directive for admissible-step enumeration."""

    count: int
    seed: int = 0


Enumeration = Union[str, Sample]  # "full" or Sample(count, seed)


def _coefficient_vectors(
    dim: int, p: int, enumeration: Enumeration
) -> Iterator[tuple[int, ...]]:
    if enumeration == "full":
        for idx in range(1, p**dim):
            digits = []
            t = idx
            for _ in range(dim):
                digits.append(t % p)
                t //= p
            yield tuple(reversed(digits))  # ascending lexicographic
    elif isinstance(enumeration, Sample):
        rng = np.random.default_rng(enumeration.seed)
        draws = rng.integers(0, p, size=(enumeration.count, dim))
        for row in draws:
            coeffs = tuple(int(v) for v in row)
            if any(coeffs):
                yield coeffs
    else:
        raise ValueError(f"unknown enumeration directive {enumeration!r}")


def admissible_steps(
    c: SymmetricSD,
    alpha: FieldElement,
    enumeration: Enumeration = "full",
    include_trivial: bool = False,
) -> Iterator[BuildStep]:
    """Stream of valid steps for the given eigenvalue.

    Every x in the alpha-eigenspace whose -1 - x.x is a square is paired
    with each admissible corner gamma (both roots, excluding gamma =
    alpha; a single root when -1 - x.x = 0).  Scalar multiples of x are
    distinct candidates on purpose: they face different gamma equations.
    """
    f = c.field
    if include_trivial:
        yield BuildStep.trivial(alpha, c.half_n)
    basis = eigen_candidates(c, alpha)
    if not basis:
        return
    basis_arr = np.array([v.entries for v in basis], dtype=np.int64)
    for coeffs in _coefficient_vectors(len(basis), f.p, enumeration):
        x_arr = (np.array(coeffs, dtype=np.int64) @ basis_arr) % f.p
        x = Vector(tuple(int(v) for v in x_arr), f)
        if x.is_zero():
            continue
        s = int(x_arr @ x_arr) % f.p
        disc = (-1 - s) % f.p
        r = f.sqrt(disc)
        if r is None:
            continue
        gammas = sorted({r, (f.p - r) % f.p})
        for g in gammas:
            if g == alpha.value:
                continue
            yield BuildStep(alpha, f.element(g), x)


@dataclass
class Chain:
    """A replayable construction chain with per-length weight reports."""

    base: SymmetricSD
    steps: list[BuildStep] = dc_field(default_factory=list)
    results: list[WeightReport] = dc_field(default_factory=list)

    def final(self) -> SymmetricSD:
        c = self.base
        for s in self.steps:
            c = extend(c, s)
        return c

    def codes(self) -> list[SymmetricSD]:
        out = [self.base]
        for s in self.steps:
            out.append(extend(out[-1], s))
        return out


def replay_chain(
    base: SymmetricSD,
    steps: list[BuildStep],
    *,
    weight_budget: int = 0,
    seed: int = 0,
    witness_targets: Optional[list[int]] = None,
    bound_targets: Optional[list[int]] = None,
) -> Chain:
    """Apply recorded steps; optionally re-measure weights along the way.

    With weight_budget = 0 no weight reports are produced (pure matrix
    replay).  Targets, when given, are per code (base first).
    """
    chain = Chain(base, list(steps))
    if weight_budget:
        for i, c in enumerate(chain.codes()):
            wt = None if witness_targets is None else witness_targets[i]
            bt = None if bound_targets is None else bound_targets[i]
            chain.results.append(
                min_weight(
                    c.code(),
                    weight_budget,
                    seed=seed,
                    witness_target=wt,
                    bound_target=bt,
                )
            )
    return chain


def search_chain(
    base: SymmetricSD,
    target_length: int,
    *,
    beam: int = 8,
    per_step_budget: int = 5_000_000,
    enumeration: Enumeration = "full",
    seed: int = 0,
) -> Chain:
    """Greedy beam search maximising the found minimum weight per length.

    At each length every beam member contributes the admissible steps of
    both roots of -1; candidates are scored with a per-step weight budget
    and the best ``beam`` codes survive, ties broken by (gamma, x).  Fully
    reproducible: enumeration order, sampling and scoring are functions of
    (base, seed, budgets) alone.
    """
    if target_length % 2 or target_length < base.n:
        raise DimensionMismatch("target length must be even and >= base length")
    r1, r2 = base.field.roots_of_minus_one()
    # beam entries: (score, tie_key, code, steps, reports)
    entries: list[tuple] = [((), (), base, [], [])]
    length = base.n
    while length < target_length:
        candidates: list[tuple] = []
        for _, _, c, steps, reports in entries:
            for alpha in (r1, r2):
                enum = enumeration
                if isinstance(enumeration, Sample):
                    enum = Sample(enumeration.count, enumeration.seed + len(steps))
                for step in admissible_steps(c, alpha, enum):
                    extended = extend(c, step)
                    report = min_weight(
                        extended.code(), per_step_budget, seed=seed
                    )
                    key = (-report.min_weight,) + step.key()
                    candidates.append(
                        (key, extended, steps + [step], reports + [report])
                    )
        if not candidates:
            # no admissible eigenvector step anywhere in the beam: fall back
            # to the always-available direct-sum step (minimum weight two)
            for _, _, c, steps, reports in entries:
                step = BuildStep.trivial(r1, c.half_n)
                extended = extend(c, step)
                report = min_weight(extended.code(), per_step_budget, seed=seed)
                key = (-report.min_weight,) + step.key()
                candidates.append((key, extended, steps + [step], reports + [report]))
        candidates.sort(key=lambda t: t[0])
        seen: set = set()
        pruned = []
        for key, extended, steps, reports in candidates:
            h = extended.A
            if h in seen:
                continue
            seen.add(h)
            pruned.append((key, key, extended, steps, reports))
            if len(pruned) >= beam:
                break
        entries = pruned
        length += 2
    best = entries[0]
    return Chain(base, best[3], best[4])

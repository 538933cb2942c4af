"""Signed-permutation (monomial) equivalence of codes.

The monomial group here is restricted to coordinate permutations composed
with +-1 scalings - exactly the transformations that preserve both
Hamming weights and self-duality over GF(p).  The module provides the
group action, the explicit transpose-equivalence witness for standard
forms, weight-distribution fingerprints usable as inequivalence
certificates, and an exact backtracking equivalence decision for small
lengths.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import wtenum
from .code import LinearCode, is_self_dual
from .exceptions import (
    DimensionMismatch,
    NotSelfDual,
    NotStandardForm,
    ParameterMismatch,
)
from .linalg import Matrix, rref


@dataclass(frozen=True)
class MonomialTransform:
    """tau = permutation then +-1 scaling: (c tau)[perm[i]] = signs[perm[i]] * c[i].

    ``signs`` entries are 1 or p-1 and are indexed by target position.
    """

    perm: tuple[int, ...]
    signs: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise DimensionMismatch("perm must be a bijection matching signs length")

    @staticmethod
    def identity(n: int) -> "MonomialTransform":
        return MonomialTransform(tuple(range(n)), (1,) * n)

    @staticmethod
    def random(n: int, p: int, rng: np.random.Generator) -> "MonomialTransform":
        perm = tuple(int(i) for i in rng.permutation(n))
        signs = tuple(1 if rng.integers(2) == 0 else p - 1 for _ in range(n))
        return MonomialTransform(perm, signs)

    def inverse(self) -> "MonomialTransform":
        n = len(self.perm)
        inv = [0] * n
        for i, j in enumerate(self.perm):
            inv[j] = i
        signs = tuple(self.signs[self.perm[i]] for i in range(n))
        return MonomialTransform(tuple(inv), signs)

    def __len__(self) -> int:
        return len(self.perm)


def apply(code: LinearCode, tau: MonomialTransform) -> LinearCode:
    """Column-permute and scale the generator; preserves self-duality."""
    if len(tau) != code.n:
        raise DimensionMismatch(f"transform acts on {len(tau)} coordinates, code has {code.n}")
    p = code.field.p
    for s in tau.signs:
        if s not in (1, p - 1):
            raise ValueError("sign entries must square to 1")
    g = code.generator.data
    out = np.empty_like(g)
    for i, j in enumerate(tau.perm):
        out[:, j] = (g[:, i] * tau.signs[j]) % p
    result = LinearCode(Matrix(out, code.field))
    if is_self_dual(code):
        assert is_self_dual(result), "monomial transform broke self-duality"
    return result


def transpose_equivalent(code: LinearCode) -> tuple[LinearCode, MonomialTransform]:
    """For a self-dual standard form (I | A): the code of (I | A^T) and a
    witness map.

    The witness swaps coordinate i with k+i and negates the first half
    (this sends (I | A) to (-A | I), whose row space is that of (I | A^T)
    because A^-1 = -A^T for self-dual codes); for symmetric A the
    returned code equals the input.
    """
    k, n = code.k, code.n
    if n != 2 * k:
        raise NotStandardForm("standard form needs n = 2k")
    if not is_self_dual(code):
        raise NotSelfDual("transpose equivalence needs a self-dual code")
    res = rref(code.generator)
    if res.pivots != tuple(range(k)):
        raise NotStandardForm("pivots are not the first k columns")
    a = res.matrix.data[:, k:]
    gen_t = np.hstack([np.eye(k, dtype=np.int64), a.T]) % code.field.p
    perm = tuple(list(range(k, 2 * k)) + list(range(k)))
    signs = tuple([code.field.p - 1] * k + [1] * k)
    return LinearCode(Matrix(gen_t, code.field)), MonomialTransform(perm, signs)


@dataclass(frozen=True)
class Fingerprint:
    """Monomial-invariant evidence: parameters plus a certified prefix of
    the weight distribution.

    ``cutoff`` is the largest weight for which the counts are complete;
    distributions are compared only on the common certified prefix, so an
    inequality is always a sound inequivalence certificate.
    """

    n: int
    k: int
    p: int
    cutoff: int
    distribution: tuple[tuple[int, int], ...]  # (weight, codeword count)
    min_weight: Optional[int]
    min_weight_count: Optional[int]

    def separates(self, other: "Fingerprint") -> bool:
        """True certifies the underlying codes are inequivalent."""
        if (self.n, self.k, self.p) != (other.n, other.k, other.p):
            return True
        common = min(self.cutoff, other.cutoff)
        mine = {v: c for v, c in self.distribution if v <= common}
        theirs = {v: c for v, c in other.distribution if v <= common}
        return mine != theirs


def fingerprint(code: LinearCode, cutoff_workunits: int = 50_000_000) -> Fingerprint:
    """Certified truncated weight distribution under a work budget.

    Deterministic: the generator is canonicalised by rref and the
    enumeration schedule depends only on (n, k, p, budget).
    """
    canonical = rref(code.generator).matrix
    engine = wtenum.InformationSetEngine(canonical.data, code.field.p)
    out = engine.run(
        budget=cutoff_workunits, track_distribution=True, push_rounds=True
    )
    scale = code.field.p - 1  # projective classes -> codewords
    dist = tuple(
        (v, c * scale) for v, c in sorted(out.distribution.items()) if v <= out.dist_threshold
    )
    min_w: Optional[int] = None
    min_c: Optional[int] = None
    if dist:
        min_w, min_c = dist[0]
    return Fingerprint(
        n=code.n,
        k=code.k,
        p=code.field.p,
        cutoff=out.dist_threshold,
        distribution=dist,
        min_weight=min_w,
        min_weight_count=min_c,
    )


@dataclass(frozen=True)
class EquivalenceResult:
    status: str  # "yes" | "no" | "unknown"
    witness: Optional[MonomialTransform] = None


def _all_codewords(code: LinearCode, budget: int) -> Optional[np.ndarray]:
    total = code.field.p**code.k
    if total > budget:
        return None
    msgs = wtenum.message_blocks(code.k, code.field.p, 1, total)
    return (msgs @ code.generator.data) % code.field.p


def is_equivalent_small(
    c1: LinearCode,
    c2: LinearCode,
    limit: int = 2_000_000,
    enumeration_budget: int = 2_000_000,
) -> EquivalenceResult:
    """Exact monomial-equivalence decision by pruned backtracking.

    Sound in both directions: "yes" returns a witness (re-verified by
    applying it), "no" means the search space was exhausted.  ``limit``
    caps the number of backtracking nodes; overrunning it gives
    "unknown".  Practical for lengths up to about 12.
    """
    if not c1.same_parameters(c2):
        raise ParameterMismatch("codes must share (n, k, p)")
    if c1.k == 0:
        return EquivalenceResult("yes", MonomialTransform.identity(c1.n))
    words1 = _all_codewords(c1, enumeration_budget)
    words2 = _all_codewords(c2, enumeration_budget)
    if words1 is None or words2 is None:
        return EquivalenceResult("unknown")
    n, p = c1.n, c1.field.p
    wt1 = np.count_nonzero(words1, axis=1)
    wt2 = np.count_nonzero(words2, axis=1)
    if Counter(wt1.tolist()) != Counter(wt2.tolist()):
        return EquivalenceResult("no")
    set2 = {tuple(int(v) for v in row) for row in words2}

    # per-column profiles: multiset of (codeword weight, value up to sign)
    def profiles(words: np.ndarray, weights: np.ndarray) -> list[Counter]:
        out = []
        for j in range(n):
            col = words[:, j]
            folded = np.minimum(col, (p - col) % p)
            out.append(Counter(zip(weights.tolist(), folded.tolist())))
        return out

    prof1 = profiles(words1, wt1)
    prof2 = profiles(words2, wt2)

    # value-level compatibility of (source column, sign) -> target column
    def col_counter(words, weights, j, sign):
        vals = (words[:, j] * sign) % p
        return Counter(zip(weights.tolist(), vals.tolist()))

    cand: dict[int, list[tuple[int, int]]] = {}
    for i in range(n):
        pairs = []
        for j in range(n):
            if prof1[i] != prof2[j]:
                continue
            for sign in (1, p - 1):
                if col_counter(words1, wt1, i, sign) == col_counter(words2, wt2, j, 1):
                    pairs.append((j, sign))
        if not pairs:
            return EquivalenceResult("no")
        cand[i] = pairs

    order = sorted(range(n), key=lambda i: len(cand[i]))

    # joint-signature pruning: after each assignment, the multiset of
    # (weight, mapped values so far) must agree between the two codes
    stack1: list[np.ndarray] = [wt1]
    stack2: list[np.ndarray] = [wt2]

    def multisets_match() -> bool:
        a = np.stack(stack1, axis=1)
        b = np.stack(stack2, axis=1)
        sa = a[np.lexsort(a.T)]
        sb = b[np.lexsort(b.T)]
        return bool(np.array_equal(sa, sb))

    nodes = 0
    assignment: dict[int, tuple[int, int]] = {}

    def backtrack(depth: int) -> Optional[dict[int, tuple[int, int]]]:
        nonlocal nodes
        if depth == n:
            return dict(assignment)
        i = order[depth]
        used = {assignment[s][0] for s in order[:depth]}
        for j, sign in cand[i]:
            if j in used:
                continue
            nodes += 1
            if nodes > limit:
                raise _NodeBudget
            assignment[i] = (j, sign)
            stack1.append((words1[:, i] * sign) % p)
            stack2.append(words2[:, j])
            if multisets_match():
                found = backtrack(depth + 1)
                if found is not None:
                    return found
            stack1.pop()
            stack2.pop()
            del assignment[i]
        return None

    try:
        found = backtrack(0)
    except _NodeBudget:
        return EquivalenceResult("unknown")
    if found is None:
        return EquivalenceResult("no")
    perm = tuple(found[i][0] for i in range(n))
    signs = [1] * n
    for i in range(n):
        j, sign = found[i]
        signs[j] = sign
    tau = MonomialTransform(perm, tuple(signs))
    mapped = apply(c1, tau)
    assert {tuple(int(v) for v in row) for row in _all_codewords(mapped, enumeration_budget)} == set2
    return EquivalenceResult("yes", tau)


class _NodeBudget(Exception):
    pass

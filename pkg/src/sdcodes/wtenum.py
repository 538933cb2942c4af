"""Minimum-weight enumeration engines.

Two routes are provided and kept deliberately independent so they can
cross-check each other:

* :func:`exhaustive_search` walks every nonzero message vector (p^k - 1 of
  them) and is the oracle for small codes.

* :class:`InformationSetEngine` enumerates low-weight messages over
  systematic generator matrices, one per disjoint column block of size k.
  After completing all messages of weight <= w on a block whose rank
  deficiency is delta, any codeword missed so far has weight >= w+1-delta
  on that block; summing over disjoint blocks gives a proven lower bound
  L.  The engine terminates exactly when L reaches the best witness weight
  U found so far.

For a code with generator (I | A) where A.A = -I, the map
(a, b) -> (-b, a) is a weight-preserving bijection of the code that swaps
the two column blocks, so enumerating the first block also completes the
second block's round.  This "mirror" halves the work for symmetric
self-dual codes and is applied whenever the algebra allows it.

A systematic view carries the message itself on its pivot columns, so a
weight-w round only ever counts nonzeros on the non-pivot columns
(weight = w + rest).  The hot loop is a numba kernel with incremental
prefix sums over the coefficient odometer; a vectorised numpy fallback
produces bit-identical results when numba is unavailable.

Budgets are expressed in work units (one unit = one codeword evaluated);
budget checks happen before each fixed-size support group, so a run is
reproducible from (generator, seed, budget) alone.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

import numpy as np

from .exceptions import BudgetExceeded

# enumeration quanta (fixed: part of the determinism contract)
_GROUP_WORDS = 1 << 16  # budget-check granularity, in codewords
_COEFF_CHUNK = 1 << 16  # max coefficient rows per numpy gemm
_NUMBA_MIN_COEFFS = 512  # below this per-support count the numpy path wins

EXHAUSTIVE_BUDGET_DEFAULT = 10**8
DEFAULT_WORK_BUDGET = 2_000_000_000

try:  # the kernel is optional; results are identical either way
    from numba import njit

    _HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    _HAVE_NUMBA = False


def _rref_int(a: np.ndarray, p: int, col_order: Sequence[int]) -> tuple[np.ndarray, list[int]]:
    """Row-reduce over GF(p) scanning columns in the given order."""
    a = a.copy() % p
    rows, _ = a.shape
    pivots: list[int] = []
    r = 0
    for c in col_order:
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), p - 2, p)) % p
        for j in np.nonzero(a[:, c])[0]:
            if j != r:
                a[j] = (a[j] - a[j, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def _count_nonzero_mod(prod: np.ndarray, p: int) -> np.ndarray:
    """Row-wise count of entries nonzero mod p.

    ``prod`` holds exact small integers in float32; the fractional part of
    prod/p is at least 1/p for non-multiples, so a fixed 1e-3 threshold is
    safe for p <= a few hundred.
    """
    q = prod * np.float32(1.0 / p)
    q -= np.floor(q)
    return (q > np.float32(1e-3)).sum(axis=-1, dtype=np.int64)


def message_blocks(k: int, p: int, start: int, stop: int) -> np.ndarray:
    """Messages start..stop-1 written in base p as length-k digit rows."""
    ids = np.arange(start, stop, dtype=np.int64)
    out = np.empty((ids.size, k), dtype=np.int64)
    t = ids.copy()
    for j in range(k):
        out[:, j] = t % p
        t //= p
    return out


def exhaustive_search(
    gen: np.ndarray, p: int, budget: int = EXHAUSTIVE_BUDGET_DEFAULT
) -> tuple[int, np.ndarray, int]:
    """Minimum weight by full message enumeration.

    Returns (d, witness codeword, work).  Raises BudgetExceeded when p^k
    exceeds the enumeration budget.
    """
    k, n = gen.shape
    total = p**k
    if total > budget:
        raise BudgetExceeded(f"p^k = {total} exceeds enumeration budget {budget}")
    gen_f = gen.astype(np.float32)
    best = n + 1
    witness: Optional[np.ndarray] = None
    work = 0
    chunk = _COEFF_CHUNK
    for start in range(1, total, chunk):
        stop = min(start + chunk, total)
        msgs = message_blocks(k, p, start, stop)
        prod = msgs.astype(np.float32) @ gen_f
        weights = _count_nonzero_mod(prod, p)
        work += stop - start
        i = int(np.argmin(weights))
        if int(weights[i]) < best:
            best = int(weights[i])
            witness = (msgs[i] @ gen) % p
            if best == 1:
                break
    assert witness is not None
    return best, witness, work


if _HAVE_NUMBA:

    @njit(cache=True)
    def _kernel_round(rows, supports, coeffs, p, best_rest):  # pragma: no cover
        """First-improvement scan of one support group.

        rows: (k, m) restricted systematic rows; coeffs: (B, w) weight-w
        coefficient rows whose LAST column varies fastest.  Returns the
        best non-pivot nonzero count seen (< best_rest when improved) and
        the (support, coeff) indices of its first occurrence.
        """
        g, w = supports.shape
        b_total = coeffs.shape[0]
        m = rows.shape[1]
        best_si = -1
        best_bi = -1
        mult = np.empty((w, p, m), np.int64)
        prefix = np.empty((w, m), np.int64)
        prev = np.empty(w, np.int64)
        for si in range(g):
            for j in range(w):
                r = supports[si, j]
                for c in range(p):
                    for t in range(m):
                        mult[j, c, t] = (c * rows[r, t]) % p
            for j in range(w):
                prev[j] = -1
            for b in range(b_total):
                t0 = w
                for j in range(w):
                    if coeffs[b, j] != prev[j]:
                        t0 = j
                        break
                for j in range(t0, w - 1):
                    c = int(coeffs[b, j])
                    prev[j] = c
                    if j == 0:
                        for t in range(m):
                            prefix[0, t] = mult[0, c, t]
                    else:
                        for t in range(m):
                            v = prefix[j - 1, t] + mult[j, c, t]
                            if v >= p:
                                v -= p
                            prefix[j, t] = v
                c = int(coeffs[b, w - 1])
                prev[w - 1] = c
                nz = 0
                if w == 1:
                    for t in range(m):
                        if mult[0, c, t] != 0:
                            nz += 1
                            if nz >= best_rest:
                                break
                else:
                    for t in range(m):
                        v = prefix[w - 2, t] + mult[w - 1, c, t]
                        if v >= p:
                            v -= p
                        if v != 0:
                            nz += 1
                            if nz >= best_rest:
                                break
                if nz < best_rest:
                    best_rest = nz
                    best_si = si
                    best_bi = b
        return best_rest, best_si, best_bi


@dataclass
class _View:
    rows: np.ndarray  # k x n systematised generator
    pivot_cols: np.ndarray  # the k unit columns, ascending
    rest_cols: np.ndarray  # the other n-k columns, ascending
    deficiency: int  # k - (pivots inside the assigned block)
    completed_w: int = 0

    @property
    def rest_rows(self) -> np.ndarray:
        return self.rows[:, self.rest_cols]


@dataclass
class EngineOutcome:
    best_weight: int
    witness: Optional[np.ndarray]
    lower_bound: int
    exact: bool
    work: int
    completed: tuple[int, ...] = ()
    distribution: dict[int, int] = dc_field(default_factory=dict)
    dist_threshold: int = -1
    mirrored: bool = False


class InformationSetEngine:
    """Round-based low-weight enumeration over disjoint information blocks."""

    def __init__(self, gen: np.ndarray, p: int, *, allow_mirror: bool = True):
        gen = np.asarray(gen, dtype=np.int64) % p
        self.p = p
        self.k, self.n = gen.shape
        self.gen = gen
        self.views: list[_View] = []
        n_blocks = max(1, self.n // self.k)
        for j in range(n_blocks):
            block = list(range(j * self.k, min((j + 1) * self.k, self.n)))
            rest = [c for c in range(self.n) if c not in block]
            rows, pivots = _rref_int(gen, p, block + rest)
            if len(pivots) != self.k:
                raise ValueError("generator matrix must have full row rank")
            block_set = set(block)
            in_block = sum(1 for c in pivots if c in block_set)
            self.views.append(self._make_view(rows, pivots, self.k - in_block))
        self.mirrored = False
        if allow_mirror and len(self.views) == 2 and self.n == 2 * self.k:
            v0 = self.views[0]
            left_is_identity = np.array_equal(
                v0.rows[:, : self.k], np.eye(self.k, dtype=np.int64)
            )
            if left_is_identity and v0.deficiency == 0 and self.views[1].deficiency == 0:
                a = v0.rows[:, self.k :]
                if np.array_equal((a @ a) % p, (-np.eye(self.k, dtype=np.int64)) % p):
                    self.mirrored = True
        self._coeff_cache: dict[int, np.ndarray] = {}
        # joint histograms[view] over (total weight, weight on the other
        # view's pivot columns); filled only when a caller asks for the
        # weight distribution
        self._hists: dict[int, np.ndarray] = {}
        self.best = self.n + 1
        self.witness: Optional[np.ndarray] = None
        self.work = 0

    def _make_view(self, rows: np.ndarray, pivots: list[int], deficiency: int) -> _View:
        pivot_cols = np.array(sorted(pivots), dtype=np.int64)
        mask = np.ones(self.n, dtype=bool)
        mask[pivot_cols] = False
        return _View(
            rows=rows,
            pivot_cols=pivot_cols,
            rest_cols=np.nonzero(mask)[0].astype(np.int64),
            deficiency=deficiency,
        )

    # -- enumeration machinery ------------------------------------------

    def _coeffs(self, w: int) -> np.ndarray:
        """Weight-w coefficient rows, leading coefficient fixed to 1.

        One row per projective class of messages with a given support;
        shape ((p-1)^(w-1), w), the LAST column varying fastest (so the
        kernel's prefix sums are reused maximally).
        """
        if w not in self._coeff_cache:
            p = self.p
            count = (p - 1) ** (w - 1)
            out = np.empty((count, w), dtype=np.int16)
            out[:, 0] = 1
            ids = np.arange(count, dtype=np.int64)
            for j in range(w - 1, 0, -1):
                out[:, j] = ids % (p - 1) + 1
                ids //= p - 1
            self._coeff_cache[w] = out
        return self._coeff_cache[w]

    def round_cost(self, w: int) -> int:
        return math.comb(self.k, w) * (self.p - 1) ** (w - 1)

    def _enumerate_round(
        self,
        view: _View,
        w: int,
        budget: int,
        hist: Optional[np.ndarray] = None,
        key_cols: Optional[np.ndarray] = None,
    ) -> bool:
        """Enumerate all weight-w projective messages over the view.

        Updates the running best witness; when ``hist`` is given, also
        accumulates the (total weight, weight on key_cols) histogram
        (full-row path).  Returns True when the round completed within
        ``budget``; work is checked before each support group, so partial
        rounds stop at deterministic group boundaries.
        """
        coeffs = self._coeffs(w)
        b_total = coeffs.shape[0]
        group = max(1, _GROUP_WORDS // b_total)
        supports_iter = itertools.combinations(range(self.k), w)
        track = hist is not None and key_cols is not None
        use_kernel = _HAVE_NUMBA and not track and b_total >= _NUMBA_MIN_COEFFS
        while True:
            batch = list(itertools.islice(supports_iter, group))
            if not batch:
                return True
            cost = len(batch) * b_total
            if self.work + cost > budget:
                return False
            idx = np.array(batch, dtype=np.int64)
            if track:
                self._group_full(view, w, idx, coeffs, hist, key_cols)
            elif use_kernel:
                self._group_kernel(view, w, idx, coeffs)
            else:
                self._group_numpy(view, w, idx, coeffs)
            self.work += cost

    def _improve(self, view: _View, supp: np.ndarray, coeff_row: np.ndarray, weight: int) -> None:
        word = (coeff_row.astype(np.int64) @ view.rows[supp]) % self.p
        self.best = weight
        self.witness = word

    def _group_kernel(self, view: _View, w: int, idx: np.ndarray, coeffs: np.ndarray) -> None:
        best_rest = self.best - w
        if best_rest < 1:
            best_rest = 1  # rounds at or above best can still tie; never improve past 0
        rest, si, bi = _kernel_round(view.rest_rows, idx, coeffs, self.p, best_rest)
        if si >= 0 and w + rest < self.best:
            self._improve(view, idx[si], np.asarray(coeffs[bi]), w + rest)

    def _group_numpy(self, view: _View, w: int, idx: np.ndarray, coeffs: np.ndarray) -> None:
        rows_f = view.rest_rows.astype(np.float32)
        sub = rows_f[idx]  # (g, w, m)
        for c0 in range(0, coeffs.shape[0], _COEFF_CHUNK):
            cf = coeffs[c0 : c0 + _COEFF_CHUNK].astype(np.float32)
            prod = np.matmul(cf, sub)  # (g, b, m) exact in float32
            weights = w + _count_nonzero_mod(prod, self.p)
            wmin = int(weights.min())
            if wmin < self.best:
                si, bi = np.unravel_index(int(np.argmin(weights)), weights.shape)
                self._improve(view, idx[int(si)], np.asarray(coeffs[c0 + int(bi)]), wmin)

    def _group_full(
        self,
        view: _View,
        w: int,
        idx: np.ndarray,
        coeffs: np.ndarray,
        hist: np.ndarray,
        key_cols: np.ndarray,
    ) -> None:
        rows_f = view.rows.astype(np.float32)
        sub = rows_f[idx]
        for c0 in range(0, coeffs.shape[0], _COEFF_CHUNK):
            cf = coeffs[c0 : c0 + _COEFF_CHUNK].astype(np.float32)
            prod = np.matmul(cf, sub)  # (g, b, n)
            q = prod * np.float32(1.0 / self.p)
            q -= np.floor(q)
            nz = q > np.float32(1e-3)
            weights = nz.sum(axis=-1, dtype=np.int64)
            key = nz[:, :, key_cols].sum(axis=-1, dtype=np.int64)
            flat = (weights * (self.k + 1) + key).ravel()
            hist += np.bincount(flat, minlength=(self.n + 1) * (self.k + 1)).reshape(
                self.n + 1, self.k + 1
            )
            wmin = int(weights.min())
            if wmin < self.best:
                si, bi = np.unravel_index(int(np.argmin(weights)), weights.shape)
                self._improve(view, idx[int(si)], np.asarray(coeffs[c0 + int(bi)]), wmin)

    # -- public driver ----------------------------------------------------

    def lower_bound(self) -> int:
        total = 0
        for v in self.views:
            total += max(0, v.completed_w + 1 - v.deficiency)
        return total

    def _fully_enumerated(self) -> bool:
        return any(v.completed_w >= self.k for v in self.views)

    def hunt_witness(
        self, target: int, budget: int, seed: int, max_sets: int = 4096
    ) -> None:
        """Random-information-set search for a codeword of weight <= target.

        Rounds of weight <= 2 (every fourth set also weight 3) over seeded
        random column orders; updates the witness only, never the bound.
        """
        if self.best <= target:
            return
        rng = np.random.default_rng(seed)
        for trial in range(max_sets):
            if self.best <= target or self.work >= budget:
                return
            order = [int(c) for c in rng.permutation(self.n)]
            rows, pivots = _rref_int(self.gen, self.p, order)
            view = self._make_view(rows, pivots, 0)
            depth = 3 if trial % 4 == 3 else 2
            for w in range(1, min(depth, self.k) + 1):
                if not self._enumerate_round(view, w, budget):
                    return
                if self.best <= target:
                    return

    def run(
        self,
        *,
        budget: int = DEFAULT_WORK_BUDGET,
        seed: int = 0,
        witness_target: Optional[int] = None,
        bound_target: Optional[int] = None,
        witness_budget_fraction: float = 0.25,
        track_distribution: bool = False,
        push_rounds: bool = False,
    ) -> EngineOutcome:
        """Run witness hunting (optional) then bound rounds until done.

        Stops as soon as the bound proves the witness optimal, or (when
        ``bound_target`` is given) as soon as L >= bound_target, or when
        the work budget runs out.  ``push_rounds`` keeps completing rounds
        to the budget even after exactness (used to widen the certified
        weight-distribution prefix).
        """
        if witness_target is not None:
            self.hunt_witness(
                witness_target, int(budget * witness_budget_fraction), seed
            )
        active = self.views[:1] if self.mirrored else self.views
        for w in range(1, self.k + 1):
            if self._stop(bound_target, push_rounds):
                break
            done_all = True
            for vi, view in enumerate(active):
                if view.completed_w >= w:
                    continue
                hist = key = snapshot = None
                if track_distribution and vi < 2 and len(self.views) >= 2:
                    hist = self._hists.setdefault(
                        vi, np.zeros((self.n + 1, self.k + 1), dtype=np.int64)
                    )
                    key = self.views[1 - vi].pivot_cols
                    snapshot = hist.copy()
                if self._enumerate_round(view, w, budget, hist, key):
                    view.completed_w = w
                    if self.mirrored:
                        self.views[1].completed_w = w
                else:
                    if hist is not None and snapshot is not None:
                        hist[:] = snapshot  # discard the incomplete round
                    done_all = False
                    break
                if self._stop(bound_target, push_rounds):
                    break
            if not done_all:
                break
        return self._outcome(track_distribution)

    def _stop(self, bound_target: Optional[int], push_rounds: bool = False) -> bool:
        if self._fully_enumerated():
            return True
        if push_rounds:
            return False
        lb = self.lower_bound()
        if lb >= self.best:
            return True
        return bound_target is not None and lb >= bound_target

    def _outcome(self, track_distribution: bool) -> EngineOutcome:
        lb = self.lower_bound()
        exact = lb >= self.best or self._fully_enumerated()
        dist: dict[int, int] = {}
        threshold = -1
        if track_distribution:
            threshold = self._dist_threshold()
            dist = self._distribution(threshold)
        return EngineOutcome(
            best_weight=self.best,
            witness=self.witness,
            lower_bound=min(lb, self.best),
            exact=exact,
            work=self.work,
            completed=tuple(v.completed_w for v in self.views),
            distribution=dist,
            dist_threshold=threshold,
            mirrored=self.mirrored,
        )

    def _dist_threshold(self) -> int:
        """Largest T with every weight-<=T codeword inside the tracked views."""
        if self._fully_enumerated():
            return self.n
        total = 0
        for v in self.views[:2]:
            total += max(0, v.completed_w + 1 - v.deficiency)
        return max(-1, total - 1)

    def _distribution(self, threshold: int) -> dict[int, int]:
        """Projective-class counts per weight v <= threshold.

        View-0 words are counted outright.  A second-block word is new
        exactly when its weight on view 0's pivot columns exceeds view 0's
        completed round depth; in mirror mode the second-block words are
        the mirrors (-mA, m) of view-0 words (m, mA), whose weight on the
        first block equals the original word's weight on the second.
        """
        h0 = self._hists.get(0)
        if h0 is None:
            return {}
        w0 = self.views[0].completed_w
        h1 = h0 if self.mirrored else self._hists.get(1)
        out: dict[int, int] = {}
        for v in range(1, min(threshold, self.n) + 1):
            count = int(h0[v].sum())
            if h1 is not None:
                count += int(h1[v, w0 + 1 :].sum())
            if count:
                out[v] = count
        return out

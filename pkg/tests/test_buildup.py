import itertools

import numpy as np
import pytest

import sdcodes as s
from sdcodes import catalog
from sdcodes.buildup import Sample, replay_chain
from sdcodes.exceptions import (
    GammaEqualsAlpha,
    GammaMismatch,
    NotAnEigenvector,
    NotNonzeroSquare,
)

from conftest import random_step, random_symmetric_sd

F5 = s.GF(5)
F13 = s.GF(13)


class TestExtend:
    def test_example_bit_exact(self, example_base):
        step = s.BuildStep.make(2, 0, [4, 3, 4, 1, 1, 1, 1, 3], F5)
        assert step.beta().value == 2
        extended = s.extend(example_base, step)
        assert extended.A == catalog.get("Example3.6.Aprime").symmetric_sd().A

    def test_trivial_step_gives_direct_sum(self):
        base = catalog.get("A_13^{26,1}").symmetric_sd()
        step = s.BuildStep.trivial(F13.element(5), 13)
        extended = s.extend(base, step)
        assert extended.A.entry(0, 0) == 5
        assert s.min_weight(extended.code(), budget=10_000_000).min_weight == 2

    def test_table5_first_step(self):
        base = catalog.get("A_13^{26,1}").symmetric_sd()
        step = s.BuildStep.make(8, 4, [2, 10, 8, 6, 3, 1, 12, 1, 11, 8, 9, 11, 2], F13)
        extended = s.extend(base, step)
        assert extended.A == catalog.get("A_13^{28,1}").symmetric_sd().A

    def test_error_taxonomy(self, example_base):
        # x = (2,0,...,0) has x.x = 4, so gamma = 0 passes the scalar checks,
        # but it is not an eigenvector of A
        with pytest.raises(NotAnEigenvector):
            s.extend(example_base, s.BuildStep.make(2, 0, [2, 0, 0, 0, 0, 0, 0, 0], F5))
        # x.x + 1 a non-square: x = first eigenbasis vector has x.x = 3 -> 1+3 = 4 square;
        # scale to hit a non-square: over GF(5) take x with x.x = 1 -> disc = -2 = 3 non-square
        basis = s.eigen_candidates(example_base, F5.element(2))
        arr = np.array([v.entries for v in basis], dtype=np.int64)
        bad = None
        for coeffs in itertools.product(range(5), repeat=4):
            x = (np.array(coeffs) @ arr) % 5
            if x.any() and (int(x @ x) % 5) == 1:
                bad = x
                break
        assert bad is not None
        with pytest.raises(NotNonzeroSquare):
            s.extend(example_base, s.BuildStep.make(2, 0, bad.tolist(), F5))
        # wrong gamma for an admissible x
        with pytest.raises(GammaMismatch):
            s.extend(example_base, s.BuildStep.make(2, 1, [4, 3, 4, 1, 1, 1, 1, 3], F5))

    def test_gamma_equals_alpha_rejected(self):
        # x with x.x = 0 forces gamma in {alpha, -alpha}; gamma = alpha must raise
        rng = np.random.default_rng(8)
        for _ in range(400):
            c = random_symmetric_sd(F13, 4, rng)
            for alpha in F13.roots_of_minus_one():
                basis = s.eigen_candidates(c, alpha)
                if not basis:
                    continue
                arr = np.array([v.entries for v in basis], dtype=np.int64)
                for coeffs in itertools.islice(
                    itertools.product(range(13), repeat=len(basis)), 1, 400
                ):
                    x = (np.array(coeffs) @ arr) % 13
                    if x.any() and int(x @ x) % 13 == 0:
                        with pytest.raises(GammaEqualsAlpha):
                            s.extend(
                                c,
                                s.BuildStep(alpha, alpha, s.Vector.make(x.tolist(), F13)),
                            )
                        return
        pytest.skip("no isotropic eigenvector sampled")

    def test_postconditions_always_checked(self):
        rng = np.random.default_rng(10)
        for p in (5, 13, 17):
            f = s.GF(p)
            c = random_symmetric_sd(f, 2, rng)
            for _ in range(20):
                step = random_step(c, rng)
                c = s.extend(c, step)  # SymmetricSD constructor re-checks all three
            assert c.half_n == 22


class TestReduce:
    def test_example_round_trip(self, example_base):
        extended = catalog.get("Example3.6.Aprime").symmetric_sd()
        reduced, step = s.reduce(extended, F5.element(2))
        assert reduced.A == example_base.A
        assert step.gamma.value == 0
        assert list(step.x.entries) == [4, 3, 4, 1, 1, 1, 1, 3]

    def test_trivial_round_trip(self):
        base = random_symmetric_sd(F13, 3, np.random.default_rng(12))
        ext = s.extend(base, s.BuildStep.trivial(F13.element(8), 3))
        reduced, step = s.reduce(ext, F13.element(5))
        assert reduced.A == base.A
        assert step.is_trivial() and step.alpha.value == 8

    def test_alpha_equals_gamma_guard(self):
        extended = catalog.get("A_13^{28,1}").symmetric_sd()  # corner gamma = 4
        reduced, step = s.reduce(extended, F13.element(8))
        assert step.gamma.value == 4
        from sdcodes.exceptions import AlphaEqualsGamma

        c30 = catalog.get("A_13^{30,1}").symmetric_sd()  # corner gamma = 11
        s.reduce(c30, F13.element(5))
        # build a code whose corner equals a root of -1 and x != 0
        rng = np.random.default_rng(14)
        while True:
            c = random_symmetric_sd(F13, 4, rng)
            corner = c.A.entry(0, 0)
            x_zero = all(v == 0 for v in c.A.data[0, 1:])
            if corner in (5, 8) and not x_zero:
                with pytest.raises(AlphaEqualsGamma):
                    s.reduce(c, F13.element(corner))
                break

    def test_round_trip_many(self):
        rng = np.random.default_rng(16)
        for p in (5, 13, 17, 29):
            f = s.GF(p)
            for _ in range(20):
                half = int(rng.integers(1, 9))
                c = random_symmetric_sd(f, half, rng)
                step = random_step(c, rng)
                ext = s.extend(c, step)
                if step.is_trivial():
                    other = [r for r in f.roots_of_minus_one() if r != step.alpha][0]
                    reduced, back = s.reduce(ext, other)
                else:
                    reduced, back = s.reduce(ext, step.alpha)
                assert reduced.A == c.A
                assert back == step
                assert s.extend(reduced, back).A == ext.A


class TestEigenCandidates:
    def test_example_dimension(self, example_base):
        assert len(s.eigen_candidates(example_base, F5.element(2))) == 4

    def test_minus_alpha_identity_full_space(self):
        alpha = F13.element(5)
        a = s.Matrix.identity(4, F13).scale(13 - 5)
        c = s.SymmetricSD(a)
        assert len(s.eigen_candidates(c, alpha)) == 0
        assert len(s.eigen_candidates(c, -alpha)) == 4

    def test_dims_sum(self):
        rng = np.random.default_rng(18)
        for _ in range(5):
            c = random_symmetric_sd(F13, 5, rng)
            dims = [len(s.eigen_candidates(c, a)) for a in F13.roots_of_minus_one()]
            assert sum(dims) == 5


class TestAdmissibleSteps:
    def test_counts_against_definition_filter(self, example_base):
        """Independent oracle: filter all 5^4 eigenspace vectors directly."""
        alpha = F5.element(2)
        basis = s.eigen_candidates(example_base, alpha)
        arr = np.array([v.entries for v in basis], dtype=np.int64)
        expected = 0
        for coeffs in itertools.product(range(5), repeat=4):
            x = (np.array(coeffs) @ arr) % 5
            if not x.any():
                continue
            disc = (-1 - int(x @ x)) % 5
            r = F5.sqrt(disc)
            if r is None:
                continue
            expected += len({r, (5 - r) % 5} - {2})
        got = list(s.admissible_steps(example_base, alpha))
        assert len(got) == expected
        assert len(got) <= 2 * 5**4

    def test_single_gamma_when_disc_zero(self, example_base):
        steps = [
            st
            for st in s.admissible_steps(example_base, F5.element(2))
            if (s.dot(st.x, st.x) + 1).value == 0
        ]
        assert steps, "ex falso: the example step itself has x.x = -1"
        by_x = {}
        for st in steps:
            by_x.setdefault(st.x.entries, []).append(st.gamma.value)
        for gammas in by_x.values():
            assert gammas == [0]

    def test_all_yielded_steps_extend(self, example_base):
        count = 0
        for st in itertools.islice(s.admissible_steps(example_base, F5.element(2)), 300):
            s.extend(example_base, st)
            count += 1
        assert count == 300

    def test_ten_thousand_sampled_steps_extend(self):
        base = catalog.get("A_13^{26,1}").symmetric_sd()
        alpha = s.GF(13).element(8)
        count = 0
        for st in itertools.islice(
            s.admissible_steps(base, alpha, Sample(40_000, 11)), 10_000
        ):
            ext = s.extend(base, st)  # full postcondition check inside
            assert ext.half_n == 14
            count += 1
        assert count == 10_000

    def test_sampled_enumeration_deterministic(self, example_base):
        a = [st.key() for st in s.admissible_steps(example_base, F5.element(2), Sample(50, 7))]
        b = [st.key() for st in s.admissible_steps(example_base, F5.element(2), Sample(50, 7))]
        assert a == b


def all_symmetric_sd_matrices(field, n):
    """Brute-force oracle: every symmetric n x n matrix A with A.A = -I."""
    p = field.p
    out = []
    entries = list(itertools.product(range(p), repeat=n * (n + 1) // 2))
    for vals in entries:
        a = np.zeros((n, n), dtype=np.int64)
        it = iter(vals)
        for i in range(n):
            for j in range(i, n):
                a[i, j] = a[j, i] = next(it)
        if ((a @ a) % p == (-np.eye(n, dtype=np.int64)) % p).all():
            out.append(tuple(map(tuple, a.tolist())))
    return set(out)


class TestCompletenessToyScale:
    def test_length_four_over_gf5(self):
        oracle = all_symmetric_sd_matrices(F5, 2)
        built = set()
        for a in (2, 3):
            base = s.SymmetricSD(s.Matrix.make([[a]], F5))
            for alpha in F5.roots_of_minus_one():
                for st in s.admissible_steps(base, alpha, include_trivial=True):
                    ext = s.extend(base, st)
                    built.add(tuple(map(tuple, ext.A.data.tolist())))
        assert built == oracle


class TestChainsAndSearch:
    def test_chain_replay_reproduces_final(self):
        record = catalog.chain("table5")
        base = catalog.get(record.base).symmetric_sd()
        chain = replay_chain(base, record.steps())
        assert chain.final().A == catalog.get("A_13^{40,1}").symmetric_sd().A

    def test_catalog_replay_checks_intermediates(self):
        for name in ("table5", "table6", "gf17_24_to_28", "example3.6"):
            catalog.replay(catalog.chain(name))

    def test_search_toy_case(self):
        base = s.SymmetricSD(s.Matrix.make([[2]], F5))
        chain = s.search_chain(base, 4, beam=4, per_step_budget=100_000)
        assert len(chain.steps) == 1
        report = chain.results[-1]
        assert report.exact and report.min_weight == 2
        # oracle: no symmetric self-dual [4,2] code over GF(5) beats d = 2
        best = max(
            s.min_weight_exhaustive(
                s.SymmetricSD(s.Matrix.make([list(r) for r in a], F5)).code()
            ).min_weight
            for a in all_symmetric_sd_matrices(F5, 2)
        )
        assert best == 2

    def test_search_is_deterministic(self):
        base = s.SymmetricSD(s.Matrix.make([[5]], F13))
        c1 = s.search_chain(base, 6, beam=3, per_step_budget=200_000, enumeration=Sample(40, 3))
        c2 = s.search_chain(base, 6, beam=3, per_step_budget=200_000, enumeration=Sample(40, 3))
        assert c1.final().A == c2.final().A
        assert [st.key() for st in c1.steps] == [st.key() for st in c2.steps]

import itertools

import numpy as np
import pytest

import sdcodes as s
from sdcodes import catalog
from sdcodes.exceptions import NotStandardForm, ParameterMismatch

from conftest import random_symmetric_sd

F5 = s.GF(5)
F13 = s.GF(13)


class TestApply:
    def test_identity(self, example_base):
        code = example_base.code()
        assert s.apply(code, s.MonomialTransform.identity(16)) == code

    def test_preserves_self_duality_and_weights(self, example_base):
        rng = np.random.default_rng(40)
        code = example_base.code()
        g = code.generator.data
        for _ in range(10):
            tau = s.MonomialTransform.random(16, 5, rng)
            mapped = s.apply(code, tau)
            assert s.is_self_dual(mapped)
        tau = s.MonomialTransform.random(16, 5, rng)
        mapped = s.apply(code, tau)
        # weight of every mapped codeword is unchanged (1000 random words)
        msgs = rng.integers(0, 5, (1000, 8))
        w_before = np.count_nonzero((msgs @ g) % 5, axis=1)
        w_after = np.count_nonzero((msgs @ mapped.generator.data) % 5, axis=1)
        # different generators span the same mapped code only as sets;
        # map each word through tau explicitly instead
        words = (msgs @ g) % 5
        mapped_words = np.empty_like(words)
        for i, j in enumerate(tau.perm):
            mapped_words[:, j] = (words[:, i] * tau.signs[j]) % 5
        assert (np.count_nonzero(mapped_words, axis=1) == w_before).all()

    def test_inverse_round_trip(self, example_base):
        rng = np.random.default_rng(41)
        code = example_base.code()
        for _ in range(20):
            tau = s.MonomialTransform.random(16, 5, rng)
            assert s.apply(s.apply(code, tau), tau.inverse()) == code


class TestTransposeEquivalent:
    def test_symmetric_fixed_point(self, example_base):
        code = example_base.code()
        other, tau = s.transpose_equivalent(code)
        assert other == code
        assert s.apply(code, tau) == other

    def test_nonsymmetric_self_dual_standard_form(self, example_base):
        # scramble a symmetric fixture into a non-symmetric self-dual form
        rng = np.random.default_rng(0)
        scrambled = s.apply(example_base.code(), s.MonomialTransform.random(16, 5, rng))
        res = s.rref(scrambled.generator)
        assert res.pivots == tuple(range(8))
        a = res.matrix.data[:, 8:]
        assert not (a == a.T).all()
        code = s.LinearCode(res.matrix)
        other, tau = s.transpose_equivalent(code)
        assert s.apply(code, tau) == other
        at = s.rref(other.generator).matrix.data[:, 8:]
        assert (at == a.T).all()
        # same weight distribution
        assert not s.fingerprint(code).separates(s.fingerprint(other))

    def test_rejects_non_self_dual(self):
        from sdcodes.exceptions import NotSelfDual

        code = catalog.get("Remark4.2").load()
        with pytest.raises(NotSelfDual):
            s.transpose_equivalent(code)

    def test_transpose_times_standard_form_identity(self):
        # A^T (I | A) = (A^T | -I) for standard self-dual forms
        for entry_id in ("A_13^{26,1}", "A_17^{24,1}"):
            e = catalog.get(entry_id)
            g = e.load().generator
            a = s.Matrix(g.data[:, e.k :].copy(), g.field)
            lhs = a.transpose() @ g
            rhs = a.transpose().hstack(s.Matrix.identity(e.k, g.field).scale(-1))
            assert lhs == rhs

    def test_requires_standard_form(self):
        code = s.LinearCode(s.Matrix.make([[1, 0, 0], [0, 1, 0]], F5))
        with pytest.raises(NotStandardForm):
            s.transpose_equivalent(code)


class TestFingerprint:
    def test_invariant_under_planted_transforms(self):
        rng = np.random.default_rng(42)
        base = random_symmetric_sd(F5, 4, rng).code()
        fp = s.fingerprint(base)
        assert fp.cutoff == base.n  # fully enumerated at this size
        for _ in range(25):
            tau = s.MonomialTransform.random(8, 5, rng)
            fp2 = s.fingerprint(s.apply(base, tau))
            assert not fp.separates(fp2)
            assert fp.distribution == fp2.distribution

    def test_different_lengths_separate(self):
        f1 = s.fingerprint(catalog.get("Example3.6.A").load(), cutoff_workunits=10**6)
        f2 = s.fingerprint(catalog.get("Example3.6.Aprime").load(), cutoff_workunits=10**6)
        assert f1.separates(f2)

    def test_counts_match_exhaustive_distribution(self):
        rng = np.random.default_rng(43)
        code = random_symmetric_sd(F5, 3, rng).code()
        fp = s.fingerprint(code)
        # oracle: full message enumeration
        msgs = np.array(list(itertools.product(range(5), repeat=3)))[1:]
        words = (msgs @ code.generator.data) % 5
        weights = np.count_nonzero(words, axis=1)
        oracle = {}
        for w in weights.tolist():
            oracle[w] = oracle.get(w, 0) + 1
        assert dict(fp.distribution) == oracle
        assert fp.min_weight == min(oracle)
        assert fp.min_weight_count == oracle[min(oracle)]

    def test_partial_budget_prefix_comparison_is_safe(self):
        code = catalog.get("A_13^{26,1}").load()
        small = s.fingerprint(code, cutoff_workunits=2_000)
        large = s.fingerprint(code, cutoff_workunits=2_000_000)
        assert small.cutoff <= large.cutoff
        assert not small.separates(large)

    def test_generator_choice_does_not_matter(self):
        rng = np.random.default_rng(50)
        code = random_symmetric_sd(F5, 4, rng).code()
        # different basis of the same row space
        mix = rng.integers(0, 5, (4, 4))
        while s.rref(s.Matrix(mix, F5)).rank < 4:
            mix = rng.integers(0, 5, (4, 4))
        other = s.LinearCode(s.Matrix((mix @ code.generator.data) % 5, F5))
        assert other == code
        assert s.fingerprint(code) == s.fingerprint(other)

    def test_counts_without_the_mirror_shortcut(self):
        """A scrambled self-dual code loses the A.A = -I structure; the
        two-view counting must still reproduce the exhaustive distribution."""
        from sdcodes import wtenum

        rng = np.random.default_rng(51)
        base = random_symmetric_sd(F5, 4, rng).code()
        for _ in range(50):
            tau = s.MonomialTransform.random(8, 5, rng)
            mapped = s.apply(base, tau)
            canonical = s.rref(mapped.generator).matrix
            engine = wtenum.InformationSetEngine(canonical.data, 5)
            if not engine.mirrored:
                break
        else:
            pytest.skip("every transform preserved the mirror structure")
        out = engine.run(budget=10**7, track_distribution=True, push_rounds=True)
        assert out.dist_threshold == 8
        msgs = np.array(list(itertools.product(range(5), repeat=4)))[1:]
        words = (msgs @ canonical.data) % 5
        weights = np.count_nonzero(words, axis=1)
        oracle = {}
        for w in weights.tolist():
            oracle[w] = oracle.get(w, 0) + 1
        got = {v: c * 4 for v, c in out.distribution.items()}
        assert got == oracle


class TestIsEquivalentSmall:
    def test_plant_and_recover(self):
        rng = np.random.default_rng(44)
        base = random_symmetric_sd(F5, 4, rng).code()
        for _ in range(5):
            tau = s.MonomialTransform.random(8, 5, rng)
            res = s.is_equivalent_small(base, s.apply(base, tau))
            assert res.status == "yes"
            assert s.apply(base, res.witness) == s.apply(base, tau)

    def test_length_two_against_exhaustive_oracle(self):
        c1 = s.LinearCode(s.Matrix.make([[1, 5]], F13))
        c2 = s.LinearCode(s.Matrix.make([[1, 8]], F13))
        # oracle: scan all 2! x 2^2 signed permutations
        expected = False
        for perm in itertools.permutations(range(2)):
            for signs in itertools.product((1, 12), repeat=2):
                tau = s.MonomialTransform(perm, signs)
                if s.apply(c1, tau) == c2:
                    expected = True
        res = s.is_equivalent_small(c1, c2)
        assert (res.status == "yes") == expected
        if res.status == "yes":
            assert s.apply(c1, res.witness) == c2

    def test_different_weights_immediately_no(self):
        rng = np.random.default_rng(45)
        # a minimum-weight-2 code: direct sum with the length-2 code
        low = s.direct_sum(
            s.SymmetricSD(s.Matrix.make([[2]], F5)), random_symmetric_sd(F5, 3, rng)
        ).code()
        assert s.min_weight_exhaustive(low).min_weight == 2
        for _ in range(100):
            c = random_symmetric_sd(F5, 4, rng).code()
            if s.min_weight_exhaustive(c).min_weight > 2:
                high = c
                break
        else:
            pytest.skip("no indecomposable [8,4] sample found")
        res = s.is_equivalent_small(low, high)
        assert res.status == "no"

    def test_parameter_mismatch(self):
        c1 = s.LinearCode(s.Matrix.make([[1, 5]], F13))
        c2 = s.LinearCode(s.Matrix.make([[1, 2]], F5))
        with pytest.raises(ParameterMismatch):
            s.is_equivalent_small(c1, c2)

    def test_unknown_on_tiny_node_budget(self):
        rng = np.random.default_rng(46)
        base = random_symmetric_sd(F5, 4, rng).code()
        tau = s.MonomialTransform.random(8, 5, rng)
        res = s.is_equivalent_small(base, s.apply(base, tau), limit=1)
        assert res.status in ("unknown", "yes")  # may find at the first node

import itertools

import numpy as np
import pytest

import sdcodes as s
from sdcodes.exceptions import DimensionMismatch
from sdcodes.linalg import RrefResult

from conftest import random_symmetric_sd

F13 = s.GF(13)
F5 = s.GF(5)


def det_mod(rows, p):
    """Independent determinant oracle: Laplace expansion."""
    n = len(rows)
    if n == 1:
        return rows[0][0] % p
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        sign = 1 if j % 2 == 0 else -1
        total += sign * rows[0][j] * det_mod(minor, p)
    return total % p


def rank_by_minors(rows, p):
    """Independent rank oracle: largest r with a nonsingular r x r minor."""
    m, n = len(rows), len(rows[0])
    for r in range(min(m, n), 0, -1):
        for rsel in itertools.combinations(range(m), r):
            for csel in itertools.combinations(range(n), r):
                sub = [[rows[i][j] for j in csel] for i in rsel]
                if det_mod(sub, p) != 0:
                    return r
    return 0


class TestMatMul:
    def test_identity(self):
        m = s.Matrix.make([[1, 2, 3], [4, 5, 6], [7, 8, 9]], F13)
        assert s.mat_mul(s.Matrix.identity(3, F13), m) == m

    def test_one_by_one(self):
        a = s.Matrix.make([[2]], F5)
        b = s.Matrix.make([[3]], F5)
        assert (a @ b).entry(0, 0) == 1

    def test_appendix_matrix_self_duality(self):
        from sdcodes import catalog

        a = catalog.get("A_13^{26,1}").symmetric_sd().A
        prod = a @ a.transpose()
        minus_i = s.Matrix.identity(13, F13).scale(-1)
        assert prod == minus_i

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            s.Matrix.make([[1, 2]], F5) @ s.Matrix.make([[1, 2]], F5)

    def test_transpose_product_rule(self):
        rng = np.random.default_rng(7)
        for _ in range(20):
            a = s.Matrix(rng.integers(0, 13, (3, 4)), F13)
            b = s.Matrix(rng.integers(0, 13, (4, 5)), F13)
            assert (a @ b).transpose() == b.transpose() @ a.transpose()


class TestRref:
    def test_zero_matrix(self):
        z = s.Matrix.zeros(3, 4, F13)
        res = s.rref(z)
        assert res.matrix == z and res.rank == 0

    def test_standard_form_fixed(self):
        from sdcodes import catalog

        g = catalog.get("A_13^{26,1}").load().generator
        res = s.rref(g)
        assert res.matrix == g and res.rank == 13

    def test_rank_against_minor_oracle(self):
        rng = np.random.default_rng(11)
        for _ in range(15):
            rows = rng.integers(0, 13, (4, 6)).tolist()
            assert s.rref(s.Matrix.make(rows, F13)).rank == rank_by_minors(rows, 13)

    def test_idempotent(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            m = s.Matrix(rng.integers(0, 5, (4, 7)), F5)
            once = s.rref(m).matrix
            assert s.rref(once).matrix == once


class TestKernel:
    def test_identity_has_trivial_kernel(self):
        assert s.kernel(s.Matrix.identity(5, F13)) == []

    def test_example_eigenspace_matches_printed_basis(self, example_base):
        # the 4x8 basis printed alongside the example
        printed = s.Matrix.make(
            [
                [1, 0, 0, 0, 0, 3, 0, 2],
                [0, 1, 0, 0, 3, 4, 2, 2],
                [0, 0, 1, 0, 4, 3, 2, 1],
                [0, 0, 0, 1, 1, 0, 2, 0],
            ],
            F5,
        )
        shifted = example_base.A - s.Matrix.identity(8, F5).scale(2)
        basis = s.kernel(shifted)
        assert len(basis) == 4
        ours = s.Matrix.make([v.entries for v in basis], F5)
        # subspace equality via canonical rref
        assert s.rref(ours).matrix == s.rref(printed).matrix

    def test_membership_recheck(self):
        rng = np.random.default_rng(5)
        m = s.Matrix(rng.integers(0, 13, (3, 7)), F13)
        basis = s.kernel(m)
        assert len(basis) == 7 - s.rref(m).rank
        arr = np.array([v.entries for v in basis], dtype=np.int64)
        for _ in range(100):
            combo = (rng.integers(0, 13, len(basis)) @ arr) % 13
            v = s.Vector.make(combo.tolist(), F13)
            assert m.mul_vec(v).is_zero()

    def test_rank_nullity(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            m = s.Matrix(rng.integers(0, 5, (4, 6)), F5)
            assert len(s.kernel(m)) + s.rref(m).rank == 6


class TestEigenspace:
    def test_scalar_matrix_full_space(self):
        alpha = 5
        a = s.Matrix.identity(6, F13).scale(alpha)
        assert len(s.eigenspace(a, alpha)) == 6

    def test_example_dimension_four(self, example_base):
        assert len(s.eigenspace(example_base.A, F5.element(2))) == 4

    def test_eigenspace_dims_sum_to_n(self):
        rng = np.random.default_rng(13)
        for half in (2, 3, 5):
            c = random_symmetric_sd(F13, half, rng)
            d5 = len(s.eigenspace(c.A, 5))
            d8 = len(s.eigenspace(c.A, 8))
            assert d5 + d8 == half


class TestBlock2x2:
    def test_example_assembly(self, example_base):
        from sdcodes import catalog

        x = s.Vector.make([4, 3, 4, 1, 1, 1, 1, 3], F5)
        beta = 2
        e = s.outer(x, x).scale(beta)
        assembled = s.block2x2(F5.element(0), x, example_base.A + e)
        expected = catalog.get("Example3.6.Aprime").symmetric_sd().A
        assert assembled == expected

    def test_block_diagonal_case(self, example_base):
        z = s.Vector.zero(8, F5)
        m = s.block2x2(F5.element(2), z, example_base.A)
        assert m.entry(0, 0) == 2
        assert m.row(0).entries[1:] == z.entries
        assert s.Matrix(m.data[1:, 1:], F5) == example_base.A

    def test_symmetry_preserved(self):
        rng = np.random.default_rng(21)
        b = rng.integers(0, 13, (4, 4))
        b = (b + b.T) % 13
        x = s.Vector.make(rng.integers(0, 13, 4).tolist(), F13)
        m = s.block2x2(F13.element(7), x, s.Matrix(b, F13))
        assert m.is_symmetric()

    def test_dot_and_outer(self):
        x = s.Vector.make([1, 2, 3], F5)
        y = s.Vector.make([4, 0, 1], F5)
        assert s.dot(x, y).value == (4 + 0 + 3) % 5
        assert s.outer(x, y).data.tolist() == [[4, 0, 1], [3, 0, 2], [2, 0, 3]]

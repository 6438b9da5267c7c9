import numpy as np
import pytest

from numpy.testing import assert_array_equal

from monoidal_transforms.algebra import linalg
from monoidal_transforms.algebra.linalg import OpCounter, Permutation, ScalarKind


class TestKinds:
    def test_vector_integer(self):
        v = linalg.vector([1, 2, 3])
        assert linalg.kind_of(v) == ScalarKind.integer
        assert v.dtype == np.int64

    def test_vector_float(self):
        assert linalg.kind_of(linalg.vector([1.0, 2])) == ScalarKind.float

    def test_vector_refuses_float_to_integer(self):
        with pytest.raises(linalg.KindError):
            linalg.vector([1.5], ScalarKind.integer)

    def test_vector_empty(self):
        with pytest.raises(linalg.DimensionError):
            linalg.vector([])

    def test_vector_read_only(self):
        v = linalg.vector([1, 2])
        with pytest.raises(ValueError):
            v[0] = 3

    def test_matrix_not_square(self):
        with pytest.raises(linalg.DimensionError):
            linalg.matrix([[1, 2, 3], [4, 5, 6]])

    def test_kind_of_bool(self):
        with pytest.raises(linalg.KindError):
            linalg.kind_of(np.array([True]))

    def test_as_kind_widens(self):
        m = linalg.as_kind(linalg.identity(2, ScalarKind.integer), ScalarKind.float)
        assert m.dtype == np.float64

    def test_as_kind_refuses_narrowing(self):
        with pytest.raises(linalg.KindError):
            linalg.as_kind(linalg.identity(2), ScalarKind.integer)


class TestMatMul:
    def test_identity(self):
        m = linalg.matrix([[1, 2], [3, 4]])
        assert_array_equal(linalg.mat_mul(linalg.identity(2, ScalarKind.integer), m), m)

    def test_sign_involution(self):
        s = linalg.diag([1, -1])
        assert_array_equal(linalg.mat_mul(s, s), np.eye(2, dtype=np.int64))

    def test_swap_times_diagonal(self):
        ret = linalg.mat_mul(linalg.matrix([[0, 1], [1, 0]]), linalg.diag([2, 3]))
        assert_array_equal(ret, [[0, 3], [2, 0]])

    def test_dimension_mismatch(self):
        with pytest.raises(linalg.DimensionError):
            linalg.mat_mul(linalg.identity(2), linalg.identity(3))

    def test_kind_mismatch(self):
        with pytest.raises(linalg.KindError):
            linalg.mat_mul(linalg.identity(2), linalg.identity(2, ScalarKind.integer))


class TestMatVec:
    def test_identity(self):
        x = linalg.vector([4.0, 5.0])
        assert_array_equal(linalg.mat_vec(linalg.identity(2), x), x)

    def test_sign_flip(self):
        assert_array_equal(linalg.mat_vec(linalg.diag([1, -1]), linalg.vector([7, 9])), [7, -9])

    def test_swap(self):
        assert_array_equal(linalg.mat_vec(linalg.matrix([[0, 1], [1, 0]]), linalg.vector([0, 2])), [2, 0])

    def test_dimension_mismatch(self):
        with pytest.raises(linalg.DimensionError):
            linalg.mat_vec(linalg.identity(2), linalg.vector([1.0, 2.0, 3.0]))

    def test_counts_nonzeros(self):
        counter = OpCounter()
        linalg.mat_vec(linalg.diag([1, -1, 1]), linalg.vector([1, 2, 3]), counter)
        linalg.vec_add(linalg.vector([1, 2, 3]), linalg.vector([1, 2, 3]), counter)
        linalg.vec_scale(2, linalg.vector([1, 2, 3]), counter)
        assert counter.count == 9


class TestMatPow:
    def test_zero(self):
        assert_array_equal(linalg.mat_pow(linalg.matrix([[0, 1], [0, 0]]), 0), np.eye(2))

    def test_positive(self):
        assert_array_equal(linalg.mat_pow(linalg.diag([2, 3]), 2), np.diag([4, 9]))

    def test_negative(self):
        assert_array_equal(linalg.mat_pow(linalg.diag([2.0, 4.0]), -1), np.diag([0.5, 0.25]))

    def test_negative_singular(self):
        with pytest.raises(linalg.SingularMatrixError):
            linalg.mat_pow(linalg.diag([1.0, 0.0]), -1)

    def test_negative_integer_unimodular(self):
        m = linalg.matrix([[1, 1], [0, 1]])
        assert_array_equal(linalg.mat_pow(m, -2), [[1, -2], [0, 1]])

    def test_negative_integer_not_unimodular(self):
        with pytest.raises(linalg.SingularMatrixError):
            linalg.mat_pow(linalg.diag([2, 1]), -1)

    def test_exponent_law(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            d = int(rng.integers(1, 7))
            q, _ = np.linalg.qr(rng.standard_normal((d, d)))
            m = linalg.matrix(q)
            p, q = (int(i) for i in rng.integers(-5, 6, 2))
            lhs = linalg.mat_pow(m, p + q)
            rhs = linalg.mat_mul(linalg.mat_pow(m, p), linalg.mat_pow(m, q))
            assert linalg.approx_eq(lhs, rhs, 1e-9)


class TestBlockDiag:
    def test_identities(self):
        eye = linalg.identity(2)
        assert_array_equal(linalg.block_diag([eye, eye]), np.eye(4))

    def test_signs(self):
        ret = linalg.block_diag([linalg.identity(2, ScalarKind.integer), linalg.diag([-1, -1])])
        assert_array_equal(ret, np.diag([1, 1, -1, -1]))

    def test_quarter_turn(self):
        assert_array_equal(linalg.block_diag([linalg.rotation(1, 4)]), [[0, -1], [1, 0]])

    def test_empty(self):
        with pytest.raises(linalg.DimensionError):
            linalg.block_diag([])

    def test_power_commutes_with_blocks(self):
        r = linalg.rotation(1, 7)
        lhs = linalg.mat_pow(linalg.block_diag([r, r, r]), 5)
        rhs = linalg.block_diag([linalg.mat_pow(r, 5)] * 3)
        assert linalg.approx_eq(lhs, rhs, 1e-9)


class TestRotation:
    @pytest.mark.parametrize('k, n, expected', [
        (0, 1, [[1, 0], [0, 1]]),
        (1, 2, [[-1, 0], [0, -1]]),
        (1, 4, [[0, -1], [1, 0]]),
        (3, 4, [[0, 1], [-1, 0]]),
    ])
    def test_exact(self, k, n, expected):
        assert_array_equal(linalg.rotation(k, n), expected)

    def test_orthonormal(self):
        r = linalg.rotation(2, 7)
        assert linalg.approx_eq(linalg.mat_mul(r, r.T), np.eye(2), 1e-15)


class TestPermutation:
    def test_invalid(self):
        with pytest.raises(linalg.PermutationError):
            Permutation([0, 0, 1])

    def test_empty(self):
        with pytest.raises(linalg.PermutationError):
            Permutation([])

    def test_identity_matrix(self):
        assert_array_equal(linalg.perm_to_matrix(Permutation(range(3))), np.eye(3, dtype=np.int64))

    def test_row_selection(self):
        p = Permutation([0, 2, 3, 1])
        x = linalg.vector([10, 20, 30, 40])
        assert_array_equal(linalg.mat_vec(linalg.perm_to_matrix(p), x), [10, 30, 40, 20])
        assert_array_equal(p.apply(x), [10, 30, 40, 20])

    def test_orthogonal(self):
        m = linalg.perm_to_matrix(Permutation([0, 2, 3, 1]))
        assert_array_equal(m @ m.T, np.eye(4, dtype=np.int64))

    def test_inverse(self):
        p = Permutation([0, 2, 3, 1])
        x = linalg.vector([1, 2, 3, 4])
        assert_array_equal(p.inverse().apply(p.apply(x)), x)


class TestApproxEq:
    def test_equal(self):
        assert linalg.approx_eq(linalg.vector([1.0]), linalg.vector([1.0]), 0)

    def test_within_tolerance(self):
        assert linalg.approx_eq(linalg.vector([1.0]), linalg.vector([1.0 + 1e-12]), 1e-9)

    def test_integer_ignores_tolerance(self):
        assert not linalg.approx_eq(linalg.vector([1]), linalg.vector([2]), 10)

    def test_shape_mismatch(self):
        with pytest.raises(linalg.DimensionError):
            linalg.approx_eq(linalg.vector([1.0]), linalg.vector([1.0, 2.0]), 1)

    def test_max_abs_diff_integer(self):
        ret = linalg.max_abs_diff(linalg.vector([1, 5]), linalg.vector([2, 2]))
        assert ret == 3
        assert isinstance(ret, int)


class TestCheckIntegerRange:
    def test_within(self):
        linalg.check_integer_range(linalg.vector([2 ** 62 - 1, -(2 ** 62 - 1)]), 2)

    def test_beyond(self):
        with pytest.raises(linalg.IntegerRangeError):
            linalg.check_integer_range(linalg.vector([2 ** 62, 0]), 2)

    def test_most_negative(self):
        with pytest.raises(linalg.IntegerRangeError):
            linalg.check_integer_range(linalg.vector([-2 ** 63]), 1)

    def test_float_unchecked(self):
        linalg.check_integer_range(linalg.vector([1e300]), 2 ** 20)

import numpy as np
import pytest

from numpy.testing import assert_array_equal

from monoidal_transforms.algebra import generators, linalg, monoid, multiaxis
from monoidal_transforms.algebra.linalg import ScalarKind
from monoidal_transforms.algebra.multiaxis import AxisElement, GeneratorFamily, ScheduleStep


@pytest.fixture
def scalar_family():
    return GeneratorFamily([linalg.matrix([[2]]), linalg.matrix([[3]])])


def scalar(value, exponents, family):
    return AxisElement(linalg.vector([value]), exponents, family)


class TestComposeAxis:
    def test_example(self, scalar_family):
        ret = multiaxis.compose_axis(scalar(1, (0, 0), scalar_family), scalar(1, (1, 0), scalar_family), 0)
        assert_array_equal(ret.vec, [2])
        assert ret.exponents == (1, 0)

    def test_uses_left_exponent(self, scalar_family):
        ret = multiaxis.compose_axis(scalar(1, (2, 1), scalar_family), scalar(5, (1, 1), scalar_family), 0)
        assert_array_equal(ret.vec, [1 + 4 * 5])
        assert ret.exponents == (3, 1)

    def test_axis_mismatch(self, scalar_family):
        with pytest.raises(multiaxis.AxisMismatchError):
            multiaxis.compose_axis(scalar(1, (0, 0), scalar_family), scalar(1, (1, 0), scalar_family), 1)

    def test_family_mismatch(self, scalar_family):
        other = GeneratorFamily([linalg.matrix([[2]]), linalg.matrix([[3]])])
        with pytest.raises(multiaxis.FamilyMismatchError):
            multiaxis.compose_axis(scalar(1, (0, 0), scalar_family), scalar(1, (0, 0), other), 0)

    def test_axis_out_of_range(self, scalar_family):
        with pytest.raises(ValueError):
            multiaxis.compose_axis(scalar(1, (0, 0), scalar_family), scalar(1, (0, 0), scalar_family), 2)

    def test_wrong_exponent_count(self, scalar_family):
        with pytest.raises(multiaxis.AxisMismatchError):
            scalar(1, (0, ), scalar_family)

    def test_negative_exponent_singular(self):
        family = GeneratorFamily([linalg.matrix([[0.0]])])
        with pytest.raises(linalg.SingularMatrixError):
            multiaxis.compose_axis(
                AxisElement(linalg.vector([1.0]), (-1, ), family),
                AxisElement(linalg.vector([1.0]), (1, ), family),
                0,
            )

    def test_identity_axis(self, scalar_family):
        partner = scalar(7, (3, 2), scalar_family)
        unit = multiaxis.identity_axis(partner, 0)
        assert unit.exponents == (0, 2)
        assert multiaxis.compose_axis(unit, partner, 0) == partner
        assert multiaxis.compose_axis(partner, unit, 0) == partner

    def test_associative(self):
        family = generators.family_rotated_diagonal(4, 3, 11)
        rng = np.random.default_rng(11)

        def element(e):
            return AxisElement(linalg.vector(rng.uniform(-1, 1, 4)), (2, e, 1), family)

        a, b, c = element(1), element(3), element(0)
        lhs = multiaxis.compose_axis(multiaxis.compose_axis(a, b, 1), c, 1)
        rhs = multiaxis.compose_axis(a, multiaxis.compose_axis(b, c, 1), 1)
        assert linalg.approx_eq(lhs.vec, rhs.vec, 1e-9)
        assert lhs.exponents == rhs.exponents == (2, 4, 1)


class TestInterchange:
    def test_scalar_example(self, scalar_family):
        vectors = [linalg.vector([i]) for i in (1, 2, 3, 4)]
        quadruple = multiaxis.interchange_quadruple(vectors, scalar_family, 0, 1, 1, 1, 1, 1)
        report = multiaxis.check_interchange(*quadruple)
        assert report.passed
        assert report.max_abs_error == 0
        assert report.tolerance == 0

        a, b, c, d = quadruple
        lhs = multiaxis.compose_axis(multiaxis.compose_axis(a, b, 0), multiaxis.compose_axis(c, d, 0), 1)
        assert_array_equal(lhs.vec, [38])

    def test_identity_generators(self):
        family = GeneratorFamily([linalg.identity(2), linalg.identity(2)])
        vectors = [linalg.vector(v) for v in ([1.0, 0.0], [0.0, 1.0], [2.0, 2.0], [3.0, -1.0])]
        a, b, c, d = multiaxis.interchange_quadruple(vectors, family, 0, 1, 2, 3, 1, 4)
        lhs = multiaxis.compose_axis(multiaxis.compose_axis(a, b, 0), multiaxis.compose_axis(c, d, 0), 1)
        assert_array_equal(lhs.vec, [6, 2])

    def test_noncommuting_fails(self):
        family = generators.noncommuting_fixture()
        vectors = [linalg.vector(v) for v in ([1.0, 0.0], [0.0, 1.0], [1.0, 1.0], [1.0, -1.0])]
        report = multiaxis.check_interchange(*multiaxis.interchange_quadruple(vectors, family, 0, 1, 1, 1, 1, 1))
        assert not report.passed
        assert report.max_abs_error > 0
        assert report.witness is not None

    def test_random_commuting(self):
        rng = np.random.default_rng(2)
        for seed in range(200):
            family = generators.family_diagonal_random(3, 2, seed)
            vectors = [linalg.vector(rng.uniform(-1, 1, 3)) for _ in range(4)]
            n, k, m, q = (int(i) for i in rng.integers(0, 5, 4))
            report = multiaxis.check_interchange(*multiaxis.interchange_quadruple(vectors, family, 0, 1, n, k, m, q))
            assert report.passed, report

    def test_same_axis(self, scalar_family):
        vectors = [linalg.vector([i]) for i in (1, 2, 3, 4)]
        with pytest.raises(ValueError):
            multiaxis.interchange_quadruple(vectors, scalar_family, 0, 0, 1, 1, 1, 1)


class TestFoldGrid:
    def test_single(self, scalar_family):
        ret = multiaxis.fold_grid([[[5]]], scalar_family)
        assert_array_equal(ret.vec, [5])
        assert ret.exponents == (1, 1)

    def test_scalar_example(self, scalar_family):
        ret = multiaxis.fold_grid([[[1], [2]], [[3], [4]]], scalar_family)
        assert_array_equal(ret.vec, [37])
        assert ret.exponents == (2, 2)

    def test_identity_generators(self):
        family = GeneratorFamily([linalg.identity(2, ScalarKind.integer)] * 2)
        grid = np.arange(12).reshape(2, 3, 2)
        assert_array_equal(multiaxis.fold_grid(grid, family).vec, grid.sum(axis=(0, 1)))

    def test_refuses_noncommuting(self):
        with pytest.raises(multiaxis.NonCommutingFamilyError):
            multiaxis.fold_grid(np.ones((2, 2, 2)), generators.noncommuting_fixture())

    def test_empty(self, scalar_family):
        with pytest.raises(ValueError):
            multiaxis.fold_grid(np.zeros((0, 2, 1), dtype=np.int64), scalar_family)

    def test_wrong_vector_dimension(self, scalar_family):
        with pytest.raises(linalg.DimensionError):
            multiaxis.fold_grid(np.zeros((2, 2, 3), dtype=np.int64), scalar_family)

    def test_one_axis_matches_closed_form(self):
        rng = np.random.default_rng(9)
        op = linalg.matrix(rng.uniform(-1, 1, (3, 3)) / 3)
        sequence = rng.uniform(-1, 1, (10, 3))
        ret = multiaxis.fold_grid(sequence, GeneratorFamily([op]))
        closed = monoid.closed_form([monoid.MonoidElement(linalg.vector(v), op) for v in sequence])
        assert linalg.approx_eq(ret.vec, closed.vec, 1e-12)

    def test_three_axes(self):
        family = GeneratorFamily([linalg.matrix([[2]]), linalg.matrix([[3]]), linalg.matrix([[5]])])
        grid = np.ones((2, 2, 2, 1), dtype=np.int64)
        # (1 + 2)(1 + 3)(1 + 5)
        assert_array_equal(multiaxis.fold_grid(grid, family).vec, [72])


class TestSchedules:
    grid = [[[1], [2]], [[3], [4]]]

    def test_rows_then_columns(self, scalar_family):
        schedule = multiaxis.axis_order_schedule((2, 2), (1, 0))
        assert schedule == [
            ScheduleStep(1, (0, 0)),
            ScheduleStep(1, (1, 0)),
            ScheduleStep(0, (0, 0)),
        ]
        assert_array_equal(multiaxis.fold_grid_scheduled(self.grid, scalar_family, schedule).vec, [37])

    def test_columns_then_rows(self, scalar_family):
        schedule = multiaxis.axis_order_schedule((2, 2), (0, 1))
        ret = multiaxis.fold_grid_scheduled(self.grid, scalar_family, schedule)
        assert_array_equal(ret.vec, [37])
        assert ret.exponents == (2, 2)

    def test_random_schedules(self):
        rng = np.random.default_rng(4)
        family = generators.family_rotated_diagonal(3, 2, 4)
        grid = rng.uniform(-1, 1, (5, 4, 3))
        reference = multiaxis.fold_grid(grid, family)
        for _ in range(20):
            ret = multiaxis.fold_grid_scheduled(grid, family, multiaxis.random_schedule((5, 4), rng))
            assert ret.exponents == reference.exponents
            assert linalg.approx_eq(ret.vec, reference.vec, 1e-9)

    def test_noncommuting_order_matters(self):
        family = generators.noncommuting_fixture()
        grid = np.array([[[1.0, 0.0], [0.0, 1.0]], [[1.0, 1.0], [1.0, -1.0]]])
        rows = multiaxis.fold_grid_scheduled(grid, family, multiaxis.axis_order_schedule((2, 2), (1, 0)))
        columns = multiaxis.fold_grid_scheduled(grid, family, multiaxis.axis_order_schedule((2, 2), (0, 1)))
        assert not linalg.approx_eq(rows.vec, columns.vec, 1e-9)

    def test_incomplete(self, scalar_family):
        with pytest.raises(multiaxis.ScheduleError):
            multiaxis.fold_grid_scheduled(self.grid, scalar_family, [ScheduleStep(1, (0, 0))])

    def test_missing_block(self, scalar_family):
        with pytest.raises(multiaxis.ScheduleError):
            multiaxis.fold_grid_scheduled(self.grid, scalar_family, [ScheduleStep(1, (0, 1))])

    def test_precondition_violation(self, scalar_family):
        schedule = [ScheduleStep(1, (0, 0)), ScheduleStep(0, (0, 0))]
        with pytest.raises(multiaxis.ScheduleError):
            multiaxis.fold_grid_scheduled(self.grid, scalar_family, schedule)

    def test_invalid_order(self):
        with pytest.raises(multiaxis.ScheduleError):
            multiaxis.axis_order_schedule((2, 2), (0, 0))

"""Tests for error norms, convergence orders and study tables."""

import io
import unittest

import numpy as np

from src.analysis import (
    MISSING,
    TABLE_COLUMNS,
    RefinementStudy,
    StudyMode,
    contour_levels,
    convergence_orders,
    emit_table,
    error_norms,
)
from src.exceptions import ConfigurationError, MissingExactSolutionError
from src.grid import build_grid
from src.sweeper import ScalarField


class TestErrorNorms(unittest.TestCase):
    """Test cases for error_norms."""

    def setUp(self):
        # 3 x 2 points with cell volume 0.01
        self.grid = build_grid((0.0, 0.0), (0.2, 0.1), (2, 1), min_cells=1)

    def test_exact_match(self):
        """Test zero errors for the exact field."""
        field = ScalarField(self.grid, np.ones(self.grid.shape), np.zeros(self.grid.shape, dtype=bool))
        self.assertEqual(error_norms(field, np.ones(self.grid.shape)), (0.0, 0.0))

    def test_two_free_points(self):
        """Test L1 weighting and the maximum over free points."""
        fixed = np.ones(self.grid.shape, dtype=bool)
        fixed[0, 0] = fixed[1, 1] = False
        exact = np.zeros(self.grid.shape)
        exact[0, 0], exact[1, 1] = 0.5, 0.1
        exact[2, 0] = 100.0
        field = ScalarField(self.grid, np.zeros(self.grid.shape), fixed)
        l1, linf = error_norms(field, exact)
        self.assertAlmostEqual(l1, 0.006)
        self.assertAlmostEqual(linf, 0.5)

    def test_per_volume(self):
        """Test that the mean L1 divides by the domain volume."""
        fixed = np.ones(self.grid.shape, dtype=bool)
        fixed[0, 0] = fixed[1, 1] = False
        exact = np.zeros(self.grid.shape)
        exact[0, 0], exact[1, 1] = 0.5, 0.1
        field = ScalarField(self.grid, np.zeros(self.grid.shape), fixed)
        l1, linf = error_norms(field, exact, per_volume=True)
        self.assertAlmostEqual(l1, 0.006 / 0.02)
        self.assertAlmostEqual(linf, 0.5)

    def test_per_volume_box_invariance(self):
        """Test that a constant error gives the same mean L1 on boxes of different size."""
        small = build_grid((0.0, 0.0), (1.0, 1.0), (8, 8))
        large = build_grid((-3.0, -3.0), (6.0, 6.0), (8, 8))
        norms = []
        for grid in (small, large):
            field = ScalarField(grid, np.full(grid.shape, 1e-3), np.zeros(grid.shape, dtype=bool))
            norms.append(error_norms(field, np.zeros(grid.shape), per_volume=True)[0])
        self.assertAlmostEqual(norms[0], norms[1], places=12)

    def test_callable_exact(self):
        """Test a vectorized exact solution."""
        x, y = self.grid.mesh()
        field = ScalarField(self.grid, x + y, np.zeros(self.grid.shape, dtype=bool))
        l1, linf = error_norms(field, lambda x, y: x + y + 1.0)
        self.assertAlmostEqual(linf, 1.0)
        self.assertAlmostEqual(l1, 6 * 0.01)

    def test_bounds(self):
        """Test L1 <= Linf * volume on random data."""
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (16, 16))
        rng = np.random.default_rng(7)
        field = ScalarField(grid, rng.normal(size=grid.shape), np.zeros(grid.shape, dtype=bool))
        l1, linf = error_norms(field, np.zeros(grid.shape))
        self.assertLessEqual(l1, linf * grid.cell_volume * grid.size)

    def test_permutation(self):
        """Test that norms do not depend on point order."""
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (8, 8))
        rng = np.random.default_rng(8)
        values, exact = rng.normal(size=grid.shape), rng.normal(size=grid.shape)
        mask = np.zeros(grid.shape, dtype=bool)
        perm = rng.permutation(grid.size)
        shuffled = ScalarField(grid, values.ravel()[perm].reshape(grid.shape), mask)
        a = error_norms(ScalarField(grid, values, mask), exact)
        b = error_norms(shuffled, exact.ravel()[perm].reshape(grid.shape))
        self.assertAlmostEqual(a[0], b[0], places=12)
        self.assertEqual(a[1], b[1])

    def test_missing_exact(self):
        """Test that errors need an exact solution."""
        field = ScalarField.constant(self.grid, 0.0)
        with self.assertRaises(MissingExactSolutionError):
            error_norms(field, None)
        with self.assertRaises(ConfigurationError):
            error_norms(field, np.zeros((2, 2)))


class TestOrders(unittest.TestCase):
    """Test cases for convergence orders."""

    def test_examples(self):
        """Test orders from tabulated errors."""
        self.assertAlmostEqual(convergence_orders([8e-3, 1e-3])[0], 3.0)
        self.assertAlmostEqual(convergence_orders([1.27e-5, 1.59e-6])[0], 3.00, delta=0.01)
        self.assertAlmostEqual(convergence_orders([4.56e-5, 2.11e-6])[0], 4.43, delta=0.01)

    def test_geometric(self):
        """Test that C * 2^(-3k) gives order 3 everywhere."""
        orders = convergence_orders([5.0 * 2.0 ** (-3 * k) for k in range(5)])
        self.assertEqual(len(orders), 4)
        for order in orders:
            self.assertAlmostEqual(order, 3.0)

    def test_invalid(self):
        """Test input validation."""
        with self.assertRaises(ConfigurationError):
            convergence_orders([1e-3])
        with self.assertRaises(ConfigurationError):
            convergence_orders([1e-3, 0.0])

    def test_contour_levels(self):
        """Test 30 equally spaced contour values."""
        levels = contour_levels(0.0, 2.0)
        self.assertEqual(len(levels), 30)
        self.assertEqual(levels[0], 0.0)
        self.assertEqual(levels[-1], 2.0)
        with self.assertRaises(ConfigurationError):
            contour_levels(1.0, 1.0)


class TestTables(unittest.TestCase):
    """Test cases for refinement studies and CSV output."""

    def test_one_row(self):
        """Test that the first row has no orders."""
        study = RefinementStudy(mode=StudyMode.SINGLE)
        study.add(20, 1e-3, 2e-3, iterations=40, wall_time=0.5)
        text = emit_table(study)
        lines = text.splitlines()
        self.assertEqual(lines[0], ",".join(TABLE_COLUMNS))
        self.assertEqual(lines[1], f"20,1.00e-03,{MISSING},2.00e-03,{MISSING},0.500")

    def test_orders(self):
        """Test that orders follow the rows."""
        study = RefinementStudy(mode=StudyMode.SPARSE_LAGRANGE)
        for k, n in enumerate((20, 40, 80, 160)):
            study.add(n, 1e-3 * 8.0 ** -k, 4e-3 * 4.0 ** -k)
        text = emit_table(study)
        lines = text.splitlines()
        self.assertEqual(len(lines), 5)
        for line in lines[2:]:
            cells = line.split(",")
            self.assertEqual(cells[2], "3.00")
            self.assertEqual(cells[4], "2.00")

    def test_missing_errors(self):
        """Test rows without errors."""
        study = RefinementStudy()
        study.add(20, None, None)
        study.add(40, None, None)
        self.assertIn("40,-,-,-,-,0.000", emit_table(study))

    def test_sinks(self):
        """Test writing to a stream."""
        study = RefinementStudy()
        study.add(20, 1e-3, 1e-3)
        stream = io.StringIO()
        text = emit_table(study, stream)
        self.assertEqual(stream.getvalue(), text)

    def test_empty(self):
        """Test that empty studies are rejected."""
        with self.assertRaises(ConfigurationError):
            emit_table(RefinementStudy())

    def test_doubling(self):
        """Test that N must double."""
        study = RefinementStudy()
        study.add(20, 1e-3, 1e-3)
        with self.assertRaises(ConfigurationError):
            study.add(30, 1e-4, 1e-4)


if __name__ == "__main__":
    unittest.main()

"""Tests for grids and sparse plans."""

import math
import unittest

import numpy as np

from src.exceptions import ConfigurationError, GridMismatchError
from src.grid import Domain, build_grid, combination_coefficient, semi_coarsened_family


class TestCartesianGrid(unittest.TestCase):
    """Test cases for CartesianGrid and build_grid."""

    def test_small_grid(self):
        """Test a 2x2-cell grid on the unit square."""
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (2, 2), min_cells=2)
        self.assertEqual(grid.shape, (3, 3))
        self.assertEqual(grid.spacing, (0.5, 0.5))
        self.assertEqual(grid.size, 9)
        self.assertAlmostEqual(grid.cell_volume, 0.25)

    def test_too_few_cells(self):
        """Test that stencil-sized grids are enforced by default."""
        with self.assertRaises(ConfigurationError):
            build_grid((0.0, 0.0), (1.0, 1.0), (3, 8))

    def test_axis_count(self):
        """Test that 4 axes are rejected."""
        with self.assertRaises(ConfigurationError):
            build_grid((0.0,) * 4, (1.0,) * 4, (4,) * 4)

    def test_nonpositive_extent(self):
        """Test that degenerate boxes are rejected."""
        with self.assertRaises(ConfigurationError):
            build_grid((0.0, 0.0), (1.0, 0.0), (4, 4))

    def test_endpoint_exact(self):
        """Test that the last coordinate hits the upper bound exactly."""
        grid = build_grid((0.0,), (2 * math.pi,), (7,))
        self.assertEqual(grid.coordinates(0)[-1], 2 * math.pi)
        self.assertEqual(grid.coordinate(0, 7), 2 * math.pi)

    def test_mesh_indexing(self):
        """Test that mesh arrays use ij indexing."""
        grid = build_grid((0.0, 10.0), (1.0, 2.0), (4, 8))
        x, y = grid.mesh()
        self.assertEqual(x.shape, (5, 9))
        self.assertEqual(x[4, 0], 1.0)
        self.assertEqual(y[0, 8], 12.0)

    def test_refinement_ratios(self):
        """Test nesting ratios between grids of one box."""
        coarse = build_grid((0.0, 0.0), (1.0, 1.0), (20, 40))
        fine = build_grid((0.0, 0.0), (1.0, 1.0), (80, 80))
        self.assertEqual(coarse.refinement_ratios(fine), (4, 2))

    def test_refinement_mismatch(self):
        """Test that non-nested grids are rejected."""
        coarse = build_grid((0.0, 0.0), (1.0, 1.0), (20, 20))
        other = build_grid((0.0, 0.0), (1.0, 1.0), (60, 60))
        with self.assertRaises(GridMismatchError):
            coarse.refinement_ratios(other)
        shifted = build_grid((0.5, 0.0), (1.0, 1.0), (40, 40))
        with self.assertRaises(GridMismatchError):
            coarse.refinement_ratios(shifted)

    def test_domain_contains(self):
        """Test closed-box membership."""
        domain = Domain((0.0, 0.0), (1.0, 2.0))
        self.assertTrue(domain.contains((1.0, 2.0)))
        self.assertFalse(domain.contains((1.1, 0.0)))
        self.assertAlmostEqual(domain.volume, 2.0)


class TestSparsePlan(unittest.TestCase):
    """Test cases for semi-coarsened families."""

    def setUp(self):
        self.square = Domain((-1.0, -1.0), (2.0, 2.0))
        self.cube = Domain((0.0, 0.0, 0.0), (1.0, 1.0, 1.0))

    def test_coefficients(self):
        """Test the combination coefficient pattern."""
        self.assertEqual([combination_coefficient(2, q) for q in range(2)], [1, -1])
        self.assertEqual([combination_coefficient(3, q) for q in range(3)], [1, -2, 1])

    def test_family_2d(self):
        """Test the 2D family for N_L = 3."""
        plan = semi_coarsened_family(self.square, 20, 3)
        self.assertEqual(len(plan.entries), 7)
        plus = [e for e in plan.entries if e.coefficient == 1]
        minus = [e for e in plan.entries if e.coefficient == -1]
        self.assertEqual(len(plus), 4)
        self.assertEqual(len(minus), 3)
        self.assertTrue(all(e.level_sum == 3 for e in plus))
        self.assertTrue(all(e.level_sum == 2 for e in minus))
        self.assertEqual(plan.coefficient_sum, 1)
        self.assertEqual(plan.finest_grid().cells, (160, 160))

    def test_family_3d(self):
        """Test the 3D family for N_L = 3."""
        plan = semi_coarsened_family(self.cube, 10, 3)
        counts = {}
        for entry in plan.entries:
            counts[entry.coefficient] = counts.get(entry.coefficient, 0) + 1
        self.assertEqual(len(plan.entries), 19)
        self.assertEqual(counts, {1: 13, -2: 6})
        self.assertEqual(sum(1 for e in plan.entries if e.level_sum == 3), 10)
        self.assertEqual(sum(1 for e in plan.entries if e.level_sum == 1), 3)
        self.assertEqual(plan.coefficient_sum, 1)

    def test_component_grids(self):
        """Test that component spacings follow the levels."""
        plan = semi_coarsened_family(self.square, 20, 3)
        grid = plan.grid_for((1, 2))
        self.assertEqual(grid.cells, (40, 80))
        self.assertEqual(grid.levels, (1, 2))
        self.assertAlmostEqual(grid.spacing[0], 2.0 / 40)

    def test_cost(self):
        """Test that the components hold fewer points than the finest grid."""
        plan = semi_coarsened_family(self.square, 20, 3)
        self.assertEqual(plan.component_points(), 18487)
        self.assertLess(plan.component_points(), plan.finest_grid().size)

    def test_invalid_family(self):
        """Test plan preconditions."""
        with self.assertRaises(ConfigurationError):
            semi_coarsened_family(self.square, 3, 3)
        with self.assertRaises(ConfigurationError):
            semi_coarsened_family(self.square, 20, 0)
        with self.assertRaises(ConfigurationError):
            semi_coarsened_family(Domain((0.0,), (1.0,)), 20, 3)

    def test_shallow_3d_family(self):
        """Test that a 3D family with N_L = 1 warns and drops a shell."""
        with self.assertLogs("src.grid.sparse_plan", level="WARNING"):
            plan = semi_coarsened_family(self.cube, 4, 1)
        self.assertEqual(len(plan.entries), 4)
        self.assertEqual(plan.coefficient_sum, 1)

    def test_grids_nest_in_target(self):
        """Test that every component grid is nested in the finest grid."""
        plan = semi_coarsened_family(self.cube, 4, 2)
        target = plan.finest_grid()
        for grid, entry in zip(plan.grids(), plan.entries):
            ratios = grid.refinement_ratios(target)
            self.assertEqual(ratios, tuple(2 ** (2 - l) for l in entry.levels))
            self.assertTrue(np.allclose(grid.coordinates(0)[[0, -1]], target.coordinates(0)[[0, -1]]))


if __name__ == "__main__":
    unittest.main()

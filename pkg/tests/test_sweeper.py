"""Tests for the Lax-Friedrichs Hamiltonian and the fast sweeping engine."""

import math
import unittest

import numpy as np
from pydantic import ValidationError

from src.exceptions import ConfigurationError, DivergenceError, NonConvergenceError
from src.grid import Domain, build_grid
from src.problem import (
    BoundaryData,
    BoundaryKind,
    PlaneMember,
    ProblemSpec,
    eikonal,
    linear_advection,
    make_benchmark,
    make_custom_problem,
)
from src.problem.benchmarks import HARBORS_2D, HARBORS_3D, RIVER_2D, RIVER_3D
from src.sweeper import (
    DerivativeMode,
    FastSweeper,
    ScalarField,
    SweepConfig,
    initialize,
    lax_friedrichs,
    rk_iteration,
    solve_single_grid,
    sweep_orderings,
)


def _zero(*coords):
    return np.zeros(np.broadcast(*coords).shape)


def _plane(x, y):
    return np.asarray(x, dtype=float) - np.asarray(y, dtype=float)


def linear_plane_problem(with_exact=True):
    """phi_x + phi_y = 0 on the unit square with the exact solution x - y."""
    boundary = BoundaryData(
        BoundaryKind.INFLOW_LINE, (PlaneMember(0, 0.0), PlaneMember(1, 0.0)), _plane
    )
    return ProblemSpec(
        name="plane",
        domain=Domain((0.0, 0.0), (1.0, 1.0)),
        hamiltonian=linear_advection((1.0, 1.0)),
        rhs=_zero,
        boundary=boundary,
        gamma=1.0,
        exact=_plane if with_exact else None,
    )


def boat_travel_times(grid, harbors, river, speed=1.0):
    """Earliest straight-line arrival from any harbor in a uniform river."""
    mesh = np.stack(np.broadcast_arrays(*grid.mesh()))
    current = np.asarray(river, dtype=float)
    best = np.full(grid.shape, np.inf)
    for harbor in harbors:
        offsets = mesh - np.asarray(harbor, dtype=float).reshape((-1,) + (1,) * grid.dim)
        distance = np.sqrt(np.sum(offsets ** 2, axis=0))
        with np.errstate(invalid="ignore", divide="ignore"):
            along = np.einsum("i,i...->...", current, offsets) / distance
            ground = along + np.sqrt(speed ** 2 - current @ current + along ** 2)
            arrival = np.where(distance > 0.0, distance / ground, 0.0)
        best = np.minimum(best, arrival)
    return best


def first_order_trace(values, fixed, h, step, ordering):
    """Reference Gauss-Seidel sweep for the 2D Eikonal equation with rhs 1."""
    phi = values.copy()
    n = phi.shape[0]

    def line(i, j, axis, m):
        return phi[m, j] if axis == 0 else phi[i, m]

    def sample(i, j, axis, offset):
        m = (i if axis == 0 else j) + offset
        if m < 0:
            return 2 * line(i, j, axis, 0) - line(i, j, axis, 1)
        if m > n - 1:
            return 2 * line(i, j, axis, n - 1) - line(i, j, axis, n - 2)
        return line(i, j, axis, m)

    rows = range(n - 1, -1, -1) if ordering[0] else range(n)
    cols = range(n - 1, -1, -1) if ordering[1] else range(n)
    for stage_step in (step, 0.5 * step):
        for i in rows:
            for j in cols:
                if fixed[i, j]:
                    continue
                um = (phi[i, j] - sample(i, j, 0, -1)) / h
                up = (sample(i, j, 0, 1) - phi[i, j]) / h
                vm = (phi[i, j] - sample(i, j, 1, -1)) / h
                vp = (sample(i, j, 1, 1) - phi[i, j]) / h
                average = math.sqrt((0.5 * (um + up)) ** 2 + (0.5 * (vm + vp)) ** 2)
                h_hat = average - 0.5 * (up - um) - 0.5 * (vp - vm)
                phi[i, j] += stage_step * (1.0 - h_hat)
    return phi


class TestLaxFriedrichs(unittest.TestCase):
    """Test cases for the numerical Hamiltonian."""

    def setUp(self):
        self.hamiltonian = eikonal(2)

    def test_consistency(self):
        """Test that equal sides give H(p)."""
        self.assertAlmostEqual(lax_friedrichs(self.hamiltonian, (0, 0), (0.6, 0.8), (0.6, 0.8)), 1.0)

    def test_dissipation(self):
        """Test the dissipation term."""
        # H((0.5, 0)) - 0.5 * 1 * (0 - 1) = 0.5 + 0.5
        self.assertAlmostEqual(lax_friedrichs(self.hamiltonian, (0, 0), (1.0, 0.0), (0.0, 0.0)), 1.0)

    def test_random_consistency(self):
        """Test consistency on random gradients."""
        rng = np.random.default_rng(2)
        for p in rng.normal(size=(50, 2)):
            self.assertAlmostEqual(lax_friedrichs(self.hamiltonian, (0, 0), p, p), float(np.linalg.norm(p)))

    def test_component_count(self):
        """Test that derivative arrays need one entry per axis."""
        with self.assertRaises(ConfigurationError):
            lax_friedrichs(self.hamiltonian, (0, 0), (1.0, 0.0, 0.0), (1.0, 0.0, 0.0))


class TestConfigAndField(unittest.TestCase):
    """Test cases for SweepConfig and ScalarField."""

    def test_for_problem(self):
        """Test that the problem gamma is the default."""
        cfg = SweepConfig.for_problem(make_benchmark(2), delta=None, max_iterations=10)
        self.assertEqual(cfg.gamma, 0.4)
        self.assertEqual(cfg.delta, 1e-11)
        self.assertEqual(cfg.max_iterations, 10)

    def test_first_order(self):
        """Test the warm-start variant."""
        cfg = SweepConfig(gamma=0.8).first_order()
        self.assertEqual(cfg.derivative_mode, DerivativeMode.FIRST_ORDER)
        self.assertEqual(cfg.delta, 1e-4)
        self.assertFalse(cfg.warm_start)

    def test_invalid_config(self):
        """Test parameter ranges."""
        with self.assertRaises(ValidationError):
            SweepConfig(gamma=0.0)
        with self.assertRaises(ValidationError):
            SweepConfig(gamma=0.5, epsilon=-1.0)

    def test_field_shape(self):
        """Test that field arrays must match the grid."""
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (4, 4))
        with self.assertRaises(ConfigurationError):
            ScalarField(grid, np.zeros((4, 4)), np.zeros((4, 4), dtype=bool))

    def test_field_from_read_only_values(self):
        """Test that fields own writeable arrays and sweep in place."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        exact = spec.exact_on(grid)
        self.assertTrue(exact.flags.writeable)
        self.assertTrue(spec.rhs_on(grid).flags.writeable)
        cfg = SweepConfig.for_problem(spec)
        fixed, _ = FastSweeper(spec, grid, cfg).band()
        frozen = np.broadcast_to(exact, grid.shape)
        self.assertFalse(frozen.flags.writeable)
        field = ScalarField(grid, frozen, np.broadcast_to(fixed, grid.shape))
        self.assertTrue(field.values.flags.writeable)
        self.assertTrue(field.fixed.flags.writeable)
        residual = rk_iteration(field, spec, cfg, (False, False))
        self.assertLess(residual, 1e-1)
        self.assertFalse(np.shares_memory(field.values, exact))

    def test_divergence_factor_range(self):
        """Test that the growth limit must exceed one."""
        with self.assertRaises(ValidationError):
            SweepConfig(gamma=0.5, divergence_factor=1.0)
        self.assertEqual(SweepConfig(gamma=0.5).first_order().divergence_factor, 1e6)

    def test_max_change_ignores_fixed(self):
        """Test that pinned points do not count toward the residual."""
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (4, 4))
        fixed = np.zeros(grid.shape, dtype=bool)
        fixed[0, 0] = True
        field = ScalarField(grid, np.zeros(grid.shape), fixed)
        previous = np.zeros(grid.shape)
        previous[0, 0] = 5.0
        previous[1, 1] = 0.25
        self.assertEqual(field.max_change(previous), 0.25)


class TestOrderings(unittest.TestCase):
    """Test cases for sweep orderings."""

    def test_2d(self):
        """Test the four 2D orderings in cycle order."""
        self.assertEqual(
            sweep_orderings(2),
            [(False, False), (True, False), (True, True), (False, True)],
        )

    def test_3d(self):
        """Test that the 8 3D orderings are distinct and change one axis at a time."""
        orderings = sweep_orderings(3)
        self.assertEqual(len(set(orderings)), 8)
        for a, b in zip(orderings, orderings[1:]):
            self.assertEqual(sum(x != y for x, y in zip(a, b)), 1)

    def test_invalid(self):
        """Test that 4 axes are rejected."""
        with self.assertRaises(ConfigurationError):
            sweep_orderings(4)


class TestInitialization(unittest.TestCase):
    """Test cases for the Gamma band and the warm start."""

    def test_inflow_band(self):
        """Test that example 1 pins three rows along each inflow line."""
        spec = make_benchmark(1)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig.for_problem(spec, warm_start=False)
        field = initialize(spec, grid, cfg)
        self.assertTrue(field.fixed[:3, :].all())
        self.assertTrue(field.fixed[:, :3].all())
        self.assertFalse(field.fixed[3:, 3:].any())
        exact = spec.exact_on(grid)
        self.assertTrue(np.array_equal(field.values[field.fixed], exact[field.fixed]))
        self.assertTrue(np.all(field.values[~field.fixed] == 10.0))

    def test_warm_start_keeps_band(self):
        """Test that the warm start leaves pinned values alone."""
        spec = make_benchmark(5, "2D")
        grid = build_grid(spec.domain.origin, spec.domain.extent, (32, 32))
        cfg = SweepConfig.for_problem(spec)
        sweeper = FastSweeper(spec, grid, cfg)
        field = sweeper.initialize()
        pinned = sweeper.pinned_field()
        self.assertTrue(np.array_equal(field.fixed, pinned.fixed))
        self.assertTrue(np.array_equal(field.values[field.fixed], pinned.values[pinned.fixed]))
        self.assertTrue(np.all(np.isfinite(field.values)))
        self.assertTrue(np.all(field.values >= 0.0))
        self.assertIn("warm_start", sweeper.timings)

    def test_source_band_travel_times(self):
        """Test that the band of a problem without exact solution holds straight-line travel times."""
        spec = make_benchmark(6, "2D")
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        fixed, values = FastSweeper(spec, grid, SweepConfig.for_problem(spec)).band()
        self.assertGreater(int(fixed.sum()), 8 * 9)
        self.assertFalse(fixed.all())
        expected = boat_travel_times(grid, HARBORS_2D, RIVER_2D)
        self.assertTrue(np.allclose(values[fixed], expected[fixed], rtol=0.0, atol=1e-12))
        # (1/4, 1/5) is a grid point and a harbor
        self.assertAlmostEqual(values[5, 4], 0.0, places=12)

    def test_shared_band_spacing(self):
        """Test that a coarser band spacing pins the same physical band."""
        spec = make_benchmark(2)
        coarse = build_grid(spec.domain.origin, spec.domain.extent, (10, 10))
        fine = build_grid(spec.domain.origin, spec.domain.extent, (40, 10))
        cfg = SweepConfig.for_problem(spec)
        own, _ = FastSweeper(spec, fine, cfg).band()
        shared, values = FastSweeper(spec, fine, cfg, band_spacing=coarse.spacing).band()
        self.assertEqual(int(own.sum()), 5 * 5)
        self.assertEqual(int(shared.sum()), 17 * 5)
        self.assertTrue(np.allclose(values[shared], spec.exact_on(fine)[shared]))

    def test_band_needs_exact(self):
        """Test that extended members need an exact solution."""
        spec = linear_plane_problem(with_exact=False)
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (8, 8))
        with self.assertRaises(ConfigurationError):
            FastSweeper(spec, grid, SweepConfig(gamma=1.0)).band()

    def test_band_covers_grid(self):
        """Test that a band over the whole grid is rejected."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (4, 4))
        with self.assertRaises(ConfigurationError):
            FastSweeper(spec, grid, SweepConfig.for_problem(spec)).pinned_field()

    def test_dimension_mismatch(self):
        """Test that grid and problem must agree on dimension."""
        spec = make_benchmark(3)
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (8, 8))
        with self.assertRaises(ConfigurationError):
            FastSweeper(spec, grid, SweepConfig.for_problem(spec))


class TestSweeps(unittest.TestCase):
    """Test cases for RK sweeps and the solve loop."""

    def test_exact_fixed_point(self):
        """Test that a linear exact solution is left in place by every ordering."""
        spec = linear_plane_problem()
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (8, 8))
        for mode in DerivativeMode:
            cfg = SweepConfig(gamma=1.0, derivative_mode=mode)
            fixed, _ = FastSweeper(spec, grid, cfg).band()
            field = ScalarField(grid, spec.exact_on(grid), fixed)
            for ordering in sweep_orderings(2):
                self.assertLess(rk_iteration(field, spec, cfg, ordering), 1e-12)
            self.assertTrue(np.allclose(field.values, spec.exact_on(grid), atol=1e-12))

    def test_smooth_fixed_point(self):
        """Test that the exact smooth solution is a near fixed point."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (80, 80))
        cfg = SweepConfig.for_problem(spec)
        fixed, _ = FastSweeper(spec, grid, cfg).band()
        exact = spec.exact_on(grid)
        field = ScalarField(grid, exact.copy(), fixed)
        residual = rk_iteration(field, spec, cfg, (False, False))
        h = grid.spacing[0]
        self.assertLess(residual, 10 * h ** 3 * np.max(np.abs(exact)))

    def test_gamma_scales_increment(self):
        """Test that doubling gamma doubles the stage increment."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        slow = FastSweeper(spec, grid, SweepConfig(gamma=0.4, warm_start=False))
        fast = FastSweeper(spec, grid, SweepConfig(gamma=0.8, warm_start=False))
        field = slow.pinned_field()
        small = slow.stage_increment(field, (15, 15))
        large = fast.stage_increment(field, (15, 15))
        self.assertNotEqual(small, 0.0)
        self.assertAlmostEqual(large, 2.0 * small, places=12)

    def test_in_place_trace(self):
        """Test that a sweep reads updated neighbors within the same pass."""
        spec = make_custom_problem((0.0, 0.0), (1.0, 1.0), [(0.5, 0.5)])
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (4, 4))
        cfg = SweepConfig(
            gamma=0.8, derivative_mode=DerivativeMode.FIRST_ORDER, band_width=0, warm_start=False
        )
        sweeper = FastSweeper(spec, grid, cfg)
        field = sweeper.pinned_field()
        self.assertEqual(int(field.fixed.sum()), 1)
        start = field.values.copy()
        for ordering in sweep_orderings(2):
            expected = first_order_trace(field.values, field.fixed, 0.25, sweeper.step, ordering)
            sweeper.sweep(field, ordering)
            self.assertTrue(np.allclose(field.values, expected, atol=1e-12))

        # A Jacobi pass from the same start lands elsewhere.
        jacobi = start.copy()
        frozen = FastSweeper(spec, grid, cfg)
        increments = np.zeros(grid.shape)
        for index in np.argwhere(~field.fixed):
            increments[tuple(index)] = frozen.stage_increment(ScalarField(grid, start, field.fixed), tuple(index))
        jacobi += increments
        once = ScalarField(grid, start.copy(), field.fixed)
        sweeper.sweep(once, (False, False))
        self.assertGreater(np.max(np.abs(once.values - jacobi)), 1e-6)

    def test_converges(self):
        """Test convergence to delta for a point source."""
        spec = make_custom_problem((0.0, 0.0), (1.0, 1.0), [(0.5, 0.5)])
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (20, 20))
        cfg = SweepConfig.for_problem(spec, max_iterations=20000)
        sweeper = FastSweeper(spec, grid, cfg)
        field, iterations = sweeper.solve()
        self.assertEqual(len(sweeper.residuals), iterations)
        self.assertLessEqual(sweeper.residuals[-1], 1e-11)
        error = np.max(np.abs(field.values - spec.exact_on(grid)))
        self.assertLess(error, 1e-2)
        self.assertIn("sweeps", sweeper.timings)

    def test_residual_decrease(self):
        """Test that late cycles change the field far less than the first."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig.for_problem(spec, max_iterations=20000)
        sweeper = FastSweeper(spec, grid, cfg)
        _, iterations = sweeper.solve()
        cycles = [max(sweeper.residuals[k:k + 4]) for k in range(0, iterations - 3, 4)]
        self.assertGreaterEqual(len(cycles), 2)
        self.assertLess(cycles[-1], 1e-3 * cycles[0])

    def test_rotation_independence(self):
        """Test that the converged field does not depend on the first ordering."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig.for_problem(spec, max_iterations=20000)
        first, _ = solve_single_grid(spec, grid, cfg, start_ordering=0)
        second, _ = solve_single_grid(spec, grid, cfg, start_ordering=2)
        self.assertLess(np.max(np.abs(first.values - second.values)), 1e-7)

    def test_non_convergence(self):
        """Test the sweep limit."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig.for_problem(spec, max_iterations=3, warm_start=False)
        with self.assertRaises(NonConvergenceError) as ctx:
            solve_single_grid(spec, grid, cfg)
        self.assertEqual(ctx.exception.iterations, 3)

    def test_divergence(self):
        """Test that a runaway step size is reported as divergence."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig(
            gamma=50.0, derivative_mode=DerivativeMode.FIRST_ORDER, warm_start=False, max_iterations=1000
        )
        with self.assertRaises(DivergenceError):
            solve_single_grid(spec, grid, cfg)

    def test_residual_growth(self):
        """Test that a finite but runaway residual is reported with the sweep and point."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig(
            gamma=3.0, derivative_mode=DerivativeMode.FIRST_ORDER, warm_start=False,
            max_iterations=1000, divergence_factor=2.0,
        )
        sweeper = FastSweeper(spec, grid, cfg)
        with self.assertRaises(DivergenceError) as ctx:
            sweeper.solve()
        self.assertEqual(ctx.exception.reason, "residual growth")
        self.assertGreater(ctx.exception.iteration, 4)
        self.assertFalse(sweeper.pinned_field().fixed[ctx.exception.point])
        self.assertTrue(all(math.isfinite(r) for r in sweeper.residuals))

    def test_ordering_length(self):
        """Test that orderings must match the grid."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        sweeper = FastSweeper(spec, grid, SweepConfig.for_problem(spec, warm_start=False))
        with self.assertRaises(ConfigurationError):
            sweeper.sweep(sweeper.pinned_field(), (False, False, False))


class TestFirstOrderEdges(unittest.TestCase):
    """Test cases for first-order sweeps reaching the box edges."""

    def test_edge_differences_agree(self):
        """Test that both one-sided differences coincide on an edge point."""
        spec = make_custom_problem((0.0, 0.0), (1.0, 1.0), [(0.5, 0.5)])
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (8, 8))
        cfg = SweepConfig(gamma=0.8, derivative_mode=DerivativeMode.FIRST_ORDER, warm_start=False)
        sweeper = FastSweeper(spec, grid, cfg)
        field = ScalarField(grid, spec.exact_on(grid), sweeper.band()[0])
        # On the edge the Hamiltonian sees (phi[1] - phi[0]) / h on both sides.
        h = grid.spacing[0]
        p = (field.values[1, 3] - field.values[0, 3]) / h
        q_minus = (field.values[0, 3] - field.values[0, 2]) / h
        q_plus = (field.values[0, 4] - field.values[0, 3]) / h
        h_hat = math.hypot(p, 0.5 * (q_minus + q_plus)) - 0.5 * (q_plus - q_minus)
        expected = sweeper.step * (1.0 - h_hat)
        self.assertAlmostEqual(sweeper.stage_increment(field, (0, 3)), expected, places=12)

    def test_cycle_changes_shrink(self):
        """Test that whole-cycle changes of first-order sweeps never grow near the solution."""
        spec = make_custom_problem((0.0, 0.0), (1.0, 1.0), [(0.5, 0.5)])
        grid = build_grid((0.0, 0.0), (1.0, 1.0), (20, 20))
        cfg = SweepConfig(
            gamma=0.8, derivative_mode=DerivativeMode.FIRST_ORDER, warm_start=False, delta=1e-6
        )
        sweeper = FastSweeper(spec, grid, cfg)
        field, _ = sweeper.solve(sweeper.pinned_field())
        changes = []
        for _ in range(6):
            before = field.values.copy()
            for ordering in sweeper.orderings:
                sweeper.sweep(field, ordering)
            changes.append(field.max_change(before))
        for earlier, later in zip(changes, changes[1:]):
            self.assertLessEqual(later, earlier + 1e-15)

    def test_smooth_source(self):
        """Test the warm start and the full solve of the smooth single-source problem."""
        spec = make_benchmark(2)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (20, 20))
        cfg = SweepConfig.for_problem(spec)
        exact = spec.exact_on(grid)
        warm = initialize(spec, grid, cfg)
        self.assertTrue(np.all(np.isfinite(warm.values)))
        self.assertLess(np.max(np.abs(warm.values - exact)), 0.5)
        field, _ = solve_single_grid(spec, grid, cfg)
        self.assertLess(np.max(np.abs(field.values - exact)), 5e-2)

    def test_two_spheres(self):
        """Test that the 3D sphere-distance problem converges on a coarse grid."""
        spec = make_benchmark(3)
        grid = build_grid(spec.domain.origin, spec.domain.extent, (16, 16, 16))
        cfg = SweepConfig.for_problem(spec, delta=1e-8)
        exact = spec.exact_on(grid)
        warm = initialize(spec, grid, cfg)
        self.assertTrue(np.all(np.isfinite(warm.values)))
        self.assertLess(np.max(np.abs(warm.values - exact)), 1.0)
        field, _ = solve_single_grid(spec, grid, cfg)
        self.assertLess(np.max(np.abs(field.values - exact)), 0.5)


class TestPointSources3D(unittest.TestCase):
    """Test cases for 3D problems pinned at isolated sources."""

    def _check(self, spec, expected, grid):
        field, _ = solve_single_grid(spec, grid, SweepConfig.for_problem(spec, delta=1e-8))
        error = np.abs(field.values - expected)[~field.fixed]
        self.assertTrue(np.all(np.isfinite(field.values)))
        self.assertLess(float(np.max(error)), 0.2)
        self.assertLess(float(np.mean(error)), 2e-2)

    def test_voronoi(self):
        """Test the distance to eight generators."""
        spec = make_benchmark(5, "3D")
        grid = build_grid(spec.domain.origin, spec.domain.extent, (16, 16, 16))
        self._check(spec, spec.exact_on(grid), grid)

    def test_boat_sail(self):
        """Test the boat-sail travel time in a uniform river."""
        spec = make_benchmark(6, "3D")
        grid = build_grid(spec.domain.origin, spec.domain.extent, (16, 16, 16))
        self._check(spec, boat_travel_times(grid, HARBORS_3D, RIVER_3D), grid)


if __name__ == "__main__":
    unittest.main()

"""Sparse-grid fixed-point fast sweeping WENO solvers for static Hamilton-Jacobi equations."""


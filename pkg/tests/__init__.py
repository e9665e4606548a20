"""Tests for the sparse-grid sweeping solver."""

"""Data-driven abstraction of piecewise-affine systems."""

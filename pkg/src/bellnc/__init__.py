"""Exact algebra kernel for Bell-state matrix factorizations, states over
matrix rings, nonnoetherian supporting rings, and their noncommutative blowup."""

__version__ = "0.1.0"

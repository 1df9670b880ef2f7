"""Exact computations with low-dimensional symplectic Lie algebras."""

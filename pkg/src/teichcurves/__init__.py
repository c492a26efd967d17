"""Exact certification of eigenforms for real multiplication on genus-two
Jacobians, with the arithmetic of Weierstrass curves that follows from it."""

__version__ = "0.1.0"

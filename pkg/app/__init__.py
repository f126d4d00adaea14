"""skewchar: Littlewood-Richardson coefficients, skew characters and their multiplicity-free equalities."""

__version__ = "1.0.0"

"""Character-theoretic analysis of small solvable groups."""

__version__ = "0.1.0"

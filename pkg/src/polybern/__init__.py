"""Poly-Bernoulli numbers B(n,k), their relatives C and D, and the objects they count."""
from .sequences import Method, Seq, c_relative, d_relative, poly_bernoulli, table, value

__version__ = "0.1.0"

__all__ = ["Seq", "Method", "value", "table", "poly_bernoulli", "c_relative", "d_relative"]

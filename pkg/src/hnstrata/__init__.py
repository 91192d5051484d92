"""Exact Harder-Narasimhan strata computations for GL_n."""

__version__ = "0.1.0"

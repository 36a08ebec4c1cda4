"""Exact computations in the Brauer category and its enhancement by an
antisymmetric m-valent vertex, with a tensor functor to (Q^m)^{(x) r}."""

__version__ = "0.1.0"

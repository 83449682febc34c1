"""Finite groupoids, bi-sets and spans, the comparison between the two models, and Burnside hom groups."""

__version__ = "0.1.0"

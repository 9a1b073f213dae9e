"""Poisson structures, Pfaffians and Frobenius splittings on flag-variety charts."""

from ._core import PfaffianError, chart, gu_split, leaves, split, split_data

__all__ = ["chart", "split", "split_data", "gu_split", "leaves", "PfaffianError"]

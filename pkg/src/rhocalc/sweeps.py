"""Finite grids of functions used by the verification sweeps."""
from __future__ import annotations

from itertools import combinations, product

from .funcset import FunctionSeq


def sparse_grid(radius: int = 3, max_support: int = 3, values=(-2, -1, 1, 2)):
    """All f with at most ``max_support`` support points in [-radius, radius]."""
    idx = range(-radius, radius + 1)
    for size in range(max_support + 1):
        for points in combinations(idx, size):
            for vals in product(values, repeat=size):
                yield FunctionSeq(zip(points, vals))


def box_grid(radius: int = 2):
    """All f with support in [-radius, radius] and values in [-radius, radius]."""
    idx = list(range(-radius, radius + 1))
    for vals in product(range(-radius, radius + 1), repeat=len(idx)):
        yield FunctionSeq(zip(idx, vals))

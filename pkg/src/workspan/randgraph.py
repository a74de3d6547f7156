"""Random DAG generation for experiments and property tests."""

from __future__ import annotations

import random
from fractions import Fraction

from .dag import TaskGraph, build_graph

_DENOMINATORS = (1, 2, 3, 4, 6)


def random_dag(rng: random.Random, n: int, edge_prob: float = 0.3,
               weights: str = "unit") -> TaskGraph:
    """Random DAG on ``n`` nodes.

    Edges only go forward along a hidden random permutation, so ids carry no
    information about the order. ``weights`` is ``"unit"`` or ``"rational"``.
    """
    ids = [f"n{i:02d}" for i in range(n)]
    rng.shuffle(ids)
    if weights == "unit":
        ws = [Fraction(1)] * n
    elif weights == "rational":
        ws = [Fraction(rng.randint(1, 12), rng.choice(_DENOMINATORS)) for _ in range(n)]
    else:
        raise ValueError(f"unknown weight mode {weights!r}")
    edges = [(ids[i], ids[j]) for i in range(n) for j in range(i + 1, n)
             if rng.random() < edge_prob]
    return build_graph(zip(ids, ws), edges)

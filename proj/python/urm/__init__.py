"""Uniquely resolvable multisets: constructions, resolution, bounds, exact
search and zebra puzzles.

Structured values are plain dicts in the same document formats the CLI
reads and writes.
"""

import json as _json

from ._urm import (
    CapacityError,
    InconsistentPuzzleError,
    MalformedInputError,
    RegimeError,
    binary_entropy,
    exact_value,
    max_ground_size,
    subset_criterion,
    theorem23_k,
)
from . import _urm

_NO_BUDGET = 1 << 60


def construct(n, m, kind="best", k=3):
    """A uniquely resolvable multiset with its certifying partition."""
    return _json.loads(_urm.construct(kind, n, m, k))


def resolve(multiset, n, limit=2):
    """Resolution status and up to `limit` witness partitions."""
    return _json.loads(_urm.resolve(_json.dumps(multiset), n, limit))


def bounds_report(n, m):
    return _json.loads(_urm.bounds_report(n, m))


def g_exact_search(n, m, max_candidates=_NO_BUDGET, max_nodes=_NO_BUDGET, time_cap_ms=0):
    """Exhaustive search for g(n, m); `exhausted` certifies the value."""
    return _json.loads(_urm.g_exact_search(n, m, max_candidates, max_nodes, time_cap_ms))


def p_k_search(k, m, max_candidates=_NO_BUDGET, max_nodes=_NO_BUDGET, time_cap_ms=0):
    """Exhaustive search for the largest all-size-k class count."""
    return _json.loads(_urm.p_k_search(k, m, max_candidates, max_nodes, time_cap_ms))


def generate_minimal_puzzle(n, m, seed=0):
    return _json.loads(_urm.generate_minimal_puzzle(n, m, seed))


def puzzle_from_instance(instance, seed=0):
    return _json.loads(_urm.puzzle_from_instance(_json.dumps(instance), seed))


def puzzle_to_multiset(puzzle):
    return _json.loads(_urm.puzzle_to_multiset(_json.dumps(puzzle)))


def solve_puzzle(puzzle, limit=2):
    return _json.loads(_urm.solve_puzzle(_json.dumps(puzzle), limit))


__all__ = [
    "CapacityError",
    "InconsistentPuzzleError",
    "MalformedInputError",
    "RegimeError",
    "binary_entropy",
    "bounds_report",
    "construct",
    "exact_value",
    "g_exact_search",
    "generate_minimal_puzzle",
    "max_ground_size",
    "p_k_search",
    "puzzle_from_instance",
    "puzzle_to_multiset",
    "resolve",
    "solve_puzzle",
    "subset_criterion",
    "theorem23_k",
]

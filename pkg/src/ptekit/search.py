"""Exhaustive desk-scale search for PTE solutions by power-sum signature collisions."""

from __future__ import annotations

from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement

from .pte import Exact, IntMultiset, PTEPair

MAX_SIZE = 5
MAX_BOUND = 100


class GuardrailError(ValueError):
    pass


@dataclass(frozen=True)
class SearchSpec:
    size: int
    bound: int
    target_degree: int
    allow_repeats: bool = False
    normalize_translation: bool = False

    def __post_init__(self):
        if not 1 <= self.size <= MAX_SIZE:
            raise GuardrailError(f"size must be in 1..{MAX_SIZE}, got {self.size}")
        if not 0 <= self.bound <= MAX_BOUND:
            raise GuardrailError(f"bound must be in 0..{MAX_BOUND}, got {self.bound}")
        if not 1 <= self.target_degree < self.size:
            raise GuardrailError(f"target degree must be in 1..{self.size - 1}, got {self.target_degree}")


def _signatures(spec: SearchSpec, leads: list[int]) -> dict[tuple[int, ...], list[tuple[int, ...]]]:
    """Group the subsets whose smallest element is in ``leads`` by power-sum signature."""
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    k = spec.target_degree
    for lead in leads:
        if spec.allow_repeats:
            tails = combinations_with_replacement(range(lead, spec.bound + 1), spec.size - 1)
        else:
            tails = combinations(range(lead + 1, spec.bound + 1), spec.size - 1)
        for tail in tails:
            subset = (lead,) + tail
            sig = tuple(sum(v**e for v in subset) for e in range(1, k + 1))
            groups[sig].append(subset)
    return groups


def find_ideal(spec: SearchSpec, workers: int = 1) -> list[PTEPair]:
    """All pairs of distinct subsets of {0..bound} agreeing on power sums 1..target_degree.

    Signatures are exact integer tuples, so grouping has no false
    collisions; each pair is still re-certified with ``pte_degree``.
    Output is sorted and independent of ``workers``.
    """
    leads = list(range(spec.bound + 1))
    if workers <= 1:
        parts = [_signatures(spec, leads)]
    else:
        buckets = [leads[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_signatures, [spec] * len(buckets), buckets))
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = defaultdict(list)
    for part in parts:
        for sig, subsets in part.items():
            groups[sig].extend(subsets)

    found = set()
    for subsets in groups.values():
        if len(subsets) < 2:
            continue
        subsets.sort()
        for A, B in combinations(subsets, 2):
            if spec.normalize_translation and min(A[0], B[0]) != 0:
                continue
            found.add((A, B))

    pairs = []
    for A, B in sorted(found):
        pair = PTEPair(IntMultiset(A), IntMultiset(B))
        if not (isinstance(pair.degree, Exact) and pair.degree.k >= spec.target_degree):
            raise AssertionError(f"signature collision {A} / {B} failed re-certification: {pair.degree}")
        pairs.append(pair)
    return pairs

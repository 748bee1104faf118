"""Huffman trees and the classical redundancy bound.

The queue discipline is pinned down so that equal-weight ties always
resolve the same way: among equal weights the node created earliest wins,
and the original leaves count as created in index order.  The first node
popped becomes the 0 child of the merge.
"""

from __future__ import annotations

import heapq
import math

from .core import Distribution, Internal, Leaf, Node


def build_huffman(dist: Distribution) -> Node:
    """Optimal full binary tree for the distribution.

    A single object yields a bare leaf of depth zero.
    """
    if dist.n == 1:
        return Leaf(0)
    heap: list[tuple[float, int, Node]] = [
        (p, i, Leaf(i)) for i, p in enumerate(dist.probs)
    ]
    heapq.heapify(heap)
    counter = dist.n
    while len(heap) > 1:
        weight_a, _, a = heapq.heappop(heap)
        weight_b, _, b = heapq.heappop(heap)
        heapq.heappush(heap, (weight_a + weight_b, counter, Internal(zero=a, one=b)))
        counter += 1
    return heap[0][2]


def gallager_sigma() -> float:
    """The constant in Gallager's redundancy bound, about 0.0861."""
    log2e = math.log2(math.e)
    return 1.0 - log2e + math.log2(log2e)


def gallager_rhs(dist: Distribution) -> float:
    """Upper bound on Huffman redundancy: top probability plus sigma."""
    return dist.top_prob() + gallager_sigma()

"""Shannon entropy and the grouping decomposition."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import Distribution
from .errors import DegenerateSplitError, DomainError, TooFewObjectsError


def entropy(dist: Distribution) -> float:
    """Entropy in bits, -sum p log2 p."""
    return -math.fsum(p * math.log2(p) for p in dist.probs)


def binary_entropy(p: float) -> float:
    """Entropy of a coin with bias p; 0 at both endpoints."""
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"binary entropy needs p in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


@dataclass(frozen=True)
class GroupingSplit:
    """The top probability and the renormalized remainder of a distribution."""

    top_prob: float
    conditional: Distribution


def grouping_decompose(dist: Distribution) -> GroupingSplit:
    """Split off the most probable object and renormalize the rest.

    Entropy decomposes across the split:
    H(dist) = h(top) + (1 - top) * H(conditional), with h the binary entropy.
    """
    if dist.n < 2:
        raise TooFewObjectsError("grouping needs at least two objects")
    order = dist.sorted_indices()
    top = dist.probs[order[0]]
    rest = 1.0 - top
    if rest <= 0.0:
        raise DegenerateSplitError("top probability is 1, remainder undefined")
    labels = tuple(dist.labels[i] for i in order[1:])
    probs = tuple(dist.probs[i] / rest for i in order[1:])
    return GroupingSplit(top, Distribution(labels, probs))

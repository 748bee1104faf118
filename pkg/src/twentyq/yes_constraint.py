"""Turning an arbitrary full binary tree into a final-yes tree.

Every leaf that sits on a 0 edge gets a 1 branch appended below it, which
pushes that leaf one level down.  Before appending, siblings are oriented
so the cheaper leaf takes the hit: in a leaf-leaf pair the lower
probability leaf moves to the 0 side, and a lone leaf sharing its parent
with a subtree moves to the 1 side where no append is needed.  Each
leaf-leaf pair then contributes min of the pair, at most half the pair's
mass, so the whole augmentation costs at most half a question on average.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Distribution, Internal, Leaf, Node, average_depth, iter_leaves
from .errors import DimensionMismatchError, NotFullBinaryError


@dataclass(frozen=True)
class AugmentResult:
    tree: Node
    added_cost: float
    swaps: int


def _append_branch(leaf: Leaf) -> Internal:
    return Internal(zero=None, one=leaf)


def augment(tree: Node, dist: Distribution) -> AugmentResult:
    """Rebuild a full binary tree so every codeword ends in 1.

    Raises NotFullBinaryError when the input already contains one-child
    nodes.  A bare single leaf is the one case that costs a full question:
    its empty codeword forces an appended branch carrying probability 1.
    """
    swaps = 0
    added = 0.0

    def prob(leaf: Leaf) -> float:
        if not 0 <= leaf.index < dist.n:
            raise DimensionMismatchError(
                f"leaf index {leaf.index} outside 0..{dist.n - 1}"
            )
        return dist.probs[leaf.index]

    def walk(node: Node) -> Node:
        nonlocal swaps, added
        assert isinstance(node, Internal)
        if node.unary:
            raise NotFullBinaryError("augment needs a full binary tree")
        zero, one = node.zero, node.one
        assert zero is not None and one is not None
        if isinstance(zero, Leaf) and isinstance(one, Leaf):
            if prob(zero) > prob(one):
                zero, one = one, zero
                swaps += 1
            added += prob(zero)
            return Internal(zero=_append_branch(zero), one=one)
        if isinstance(zero, Leaf):
            swaps += 1
            return Internal(zero=walk(one), one=zero)
        if isinstance(one, Leaf):
            return Internal(zero=walk(zero), one=one)
        return Internal(zero=walk(zero), one=walk(one))

    if isinstance(tree, Leaf):
        added = prob(tree)
        return AugmentResult(_append_branch(tree), added, 0)
    return AugmentResult(walk(tree), added, swaps)


def relabel_optimally(tree: Node, dist: Distribution) -> Node:
    """Reassign objects to leaves so higher probability sits shallower.

    Leaf positions are taken in preorder and ranked by depth (ties keep
    preorder); objects are ranked by decreasing probability.  The exchange
    argument makes this the cheapest assignment for the fixed shape, so
    the average depth never increases.
    """
    slots = list(iter_leaves(tree))
    if len(slots) != dist.n:
        raise DimensionMismatchError(
            f"tree has {len(slots)} leaves for {dist.n} objects"
        )
    by_depth = sorted(range(len(slots)), key=lambda k: (len(slots[k][1]), k))
    objects = dist.sorted_indices()
    new_index: dict[int, int] = {}
    for rank, slot in enumerate(by_depth):
        new_index[id(slots[slot][0])] = objects[rank]

    def rebuild(node: Node) -> Node:
        if isinstance(node, Leaf):
            return Leaf(new_index[id(node)])
        zero = rebuild(node.zero) if node.zero is not None else None
        one = rebuild(node.one) if node.one is not None else None
        return Internal(zero=zero, one=one)

    result = rebuild(tree)
    assert average_depth(result, dist) <= average_depth(tree, dist) + 1e-9
    return result

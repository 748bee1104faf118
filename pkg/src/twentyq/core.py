"""Core value types: probability distributions and binary question trees.

A question tree is a rooted binary tree whose edges are labelled 0 ("no")
and 1 ("yes") and whose leaves carry object indices.  The codeword of an
object is the edge-label string on the path from the root to its leaf.
A tree satisfies the final-yes constraint when every codeword ends in 1,
which is the same as saying every leaf hangs on a 1 edge.  Such trees may
contain one-child internal nodes: that is the only way to place a leaf
below a 0 edge.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Union

from .errors import (
    DimensionMismatchError,
    DuplicateLabelError,
    EmptyInputError,
    NonPositiveProbError,
    SumNotOneError,
)

# Probabilities must sum to 1 within this tolerance.
PROB_TOLERANCE = 1e-9

# A depth profile is the sorted multiset of leaf depths of a tree,
# kept as a non-decreasing tuple of positive integers.
DepthProfile = tuple[int, ...]


@dataclass(frozen=True)
class Distribution:
    """A validated probability distribution over labelled objects.

    Construct through :func:`validate_distribution`; the dataclass itself
    performs no checks.
    """

    labels: tuple[str, ...]
    probs: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.labels)

    def sorted_indices(self) -> tuple[int, ...]:
        """Object indices ordered by decreasing probability, ties by position."""
        return tuple(sorted(range(self.n), key=lambda i: (-self.probs[i], i)))

    def sorted_probs(self) -> tuple[float, ...]:
        return tuple(self.probs[i] for i in self.sorted_indices())

    def sorted_labels(self) -> tuple[str, ...]:
        return tuple(self.labels[i] for i in self.sorted_indices())

    def sorted_view(self) -> "Distribution":
        return Distribution(self.sorted_labels(), self.sorted_probs())

    def top_prob(self) -> float:
        return max(self.probs)

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "probs": list(self.probs)}


def validate_distribution(labels: Iterable[str], probs: Iterable[float]) -> Distribution:
    """Check labels and probabilities and return a `Distribution`.

    Probabilities must be finite and strictly positive and sum to 1 within
    `PROB_TOLERANCE`.  Labels must be distinct non-empty strings, one per
    probability.
    """
    labels = tuple(labels)
    probs = tuple(float(p) for p in probs)
    if len(labels) == 0 and len(probs) == 0:
        raise EmptyInputError("a distribution needs at least one object")
    if len(labels) != len(probs):
        raise DimensionMismatchError(
            f"{len(labels)} labels for {len(probs)} probabilities"
        )
    for text in labels:
        if not isinstance(text, str) or text == "":
            raise DuplicateLabelError(f"labels must be non-empty strings, got {text!r}")
    if len(set(labels)) != len(labels):
        seen = set()
        for text in labels:
            if text in seen:
                raise DuplicateLabelError(f"duplicate label {text!r}")
            seen.add(text)
    for p in probs:
        if not math.isfinite(p) or p <= 0.0:
            raise NonPositiveProbError(f"probabilities must be positive, got {p!r}")
    total = math.fsum(probs)
    if abs(total - 1.0) > PROB_TOLERANCE:
        raise SumNotOneError(f"probabilities sum to {total!r}, not 1")
    return Distribution(labels, probs)


def parse_distribution(obj: object, normalize: bool = False) -> Distribution:
    """Build a distribution from a decoded ``{"labels": [...], "probs": [...]}``."""
    if not isinstance(obj, dict) or "labels" not in obj or "probs" not in obj:
        raise EmptyInputError('expected an object with "labels" and "probs"')
    labels = obj["labels"]
    probs = obj["probs"]
    if not isinstance(labels, list) or not isinstance(probs, list):
        raise EmptyInputError('"labels" and "probs" must be arrays')
    if normalize:
        values = [float(p) for p in probs]
        for p in values:
            if not math.isfinite(p) or p <= 0.0:
                raise NonPositiveProbError(f"probabilities must be positive, got {p!r}")
        total = math.fsum(values)
        probs = [p / total for p in values]
    return validate_distribution(labels, probs)


def load_distribution(path: str, normalize: bool = False) -> Distribution:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_distribution(json.load(handle), normalize=normalize)


@dataclass(frozen=True)
class Leaf:
    """A leaf holding the index of one object."""

    index: int


@dataclass(frozen=True)
class Internal:
    """An internal node; `zero` and `one` are the "no" and "yes" children."""

    zero: Optional["Node"] = None
    one: Optional["Node"] = None

    def __post_init__(self) -> None:
        if self.zero is None and self.one is None:
            raise ValueError("internal node needs at least one child")

    @property
    def unary(self) -> bool:
        return self.zero is None or self.one is None

    def only_child(self) -> "Node":
        child = self.one if self.zero is None else self.zero
        assert child is not None
        return child


Node = Union[Leaf, Internal]


def iter_leaves(tree: Node) -> Iterator[tuple[Leaf, str]]:
    """Yield (leaf, codeword) pairs in preorder, zero branch first."""
    stack: list[tuple[Node, str]] = [(tree, "")]
    while stack:
        node, path = stack.pop()
        if isinstance(node, Leaf):
            yield node, path
            continue
        if node.one is not None:
            stack.append((node.one, path + "1"))
        if node.zero is not None:
            stack.append((node.zero, path + "0"))


def count_leaves(tree: Node) -> int:
    return sum(1 for _ in iter_leaves(tree))


def _leaf_index_check(tree: Node, n: int) -> list[str]:
    words: list[Optional[str]] = [None] * n
    for leaf, path in iter_leaves(tree):
        if not 0 <= leaf.index < n:
            raise DimensionMismatchError(
                f"leaf index {leaf.index} outside 0..{n - 1}"
            )
        if words[leaf.index] is not None:
            raise DimensionMismatchError(f"object {leaf.index} appears on two leaves")
        words[leaf.index] = path
    missing = [i for i, w in enumerate(words) if w is None]
    if missing:
        raise DimensionMismatchError(f"objects {missing} have no leaf")
    return [w for w in words if w is not None]


def codewords(tree: Node) -> list[str]:
    """Codewords indexed by object; leaf indices must form a permutation."""
    return _leaf_index_check(tree, count_leaves(tree))


def leaf_depths(tree: Node) -> list[int]:
    """Leaf depths indexed by object."""
    return [len(w) for w in codewords(tree)]


def depth_profile(tree: Node) -> DepthProfile:
    return tuple(sorted(len(path) for _, path in iter_leaves(tree)))


def is_yes_tree(tree: Node) -> bool:
    """True when every leaf hangs on a 1 edge, so every codeword ends in 1."""
    return all(path.endswith("1") for _, path in iter_leaves(tree))


def average_depth(tree: Node, dist: Distribution) -> float:
    """Expected number of edges from the root to the object's leaf."""
    total = 0.0
    seen = 0
    for leaf, path in iter_leaves(tree):
        if not 0 <= leaf.index < dist.n:
            raise DimensionMismatchError(
                f"leaf index {leaf.index} outside 0..{dist.n - 1}"
            )
        total += dist.probs[leaf.index] * len(path)
        seen += 1
    if seen != dist.n:
        raise DimensionMismatchError(f"tree has {seen} leaves for {dist.n} objects")
    return total


def prune_appended(tree: Node) -> Node:
    """Splice out every one-child internal node.

    The result is a full binary tree (or a bare leaf) over the same leaves.
    Removing a node shortens every codeword that passes through it, so the
    average depth can only go down.
    """
    if isinstance(tree, Leaf):
        return tree
    while isinstance(tree, Internal) and tree.unary:
        tree = tree.only_child()
    if isinstance(tree, Leaf):
        return tree
    assert tree.zero is not None and tree.one is not None
    return Internal(zero=prune_appended(tree.zero), one=prune_appended(tree.one))


def is_full_binary(tree: Node) -> bool:
    if isinstance(tree, Leaf):
        return True
    if tree.unary:
        return False
    assert tree.zero is not None and tree.one is not None
    return is_full_binary(tree.zero) and is_full_binary(tree.one)


def to_dot(tree: Node, dist: Optional[Distribution] = None) -> str:
    """Render the tree in DOT.  Appended branches (one-child nodes) are dashed."""
    lines = [
        "digraph question_tree {",
        "  node [shape=circle, label=\"\"];",
    ]
    names: dict[int, str] = {}

    def name_of(node: Node) -> str:
        key = id(node)
        if key not in names:
            names[key] = f"n{len(names)}"
        return names[key]

    def visit(node: Node) -> None:
        me = name_of(node)
        if isinstance(node, Leaf):
            if dist is not None:
                text = f"{dist.labels[node.index]} ({dist.probs[node.index]:.4g})"
            else:
                text = f"#{node.index}"
            lines.append(f'  {me} [shape=box, label="{text}"];')
            return
        dashed = ", style=dashed" if node.unary else ""
        for bit, child in (("0", node.zero), ("1", node.one)):
            if child is None:
                continue
            lines.append(f'  {me} -> {name_of(child)} [label="{bit}"{dashed}];')
            visit(child)

    visit(tree)
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class AnalysisReport:
    """Everything the analyzer measures for one distribution.

    `bounds_hold` maps the name of each checked inequality to whether it
    held within tolerance; `notes` carries human-readable remarks.
    """

    n: int
    entropy_bits: float
    l_huffman: float
    l_augmented: float
    l_augmented_relabeled: float
    l_yes: float
    l_hat: float
    gallager_sigma: float
    gallager_rhs: float
    bounds_hold: dict[str, bool]
    notes: tuple[str, ...]

    @property
    def all_hold(self) -> bool:
        return all(self.bounds_hold.values())

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "entropy_bits": self.entropy_bits,
            "l_huffman": self.l_huffman,
            "l_augmented": self.l_augmented,
            "l_augmented_relabeled": self.l_augmented_relabeled,
            "l_yes": self.l_yes,
            "l_hat": self.l_hat,
            "gallager_sigma": self.gallager_sigma,
            "gallager_rhs": self.gallager_rhs,
            "bounds_hold": dict(self.bounds_hold),
            "notes": list(self.notes),
        }

"""Exact search for the cheapest final-yes question tree.

Shapes are explored through leaf-depth profiles rather than explicit
trees.  Writing S(n) for the profiles of n-leaf trees in which every
one-child node exists only to hang a leaf on a 1 edge:

    S(1) = {{1}}
    S(n) = { {1} union (A + 1)       : A in S(n - 1) }
     union { (A + 1) union (B + 1)   : A in S(k), B in S(n - k) }

The first form puts a leaf directly on the root's 1 edge; the second
joins two smaller trees below the root.  Shapes with a one-child node
above an internal node are skipped, since splicing the node out shortens
every codeword below it and never breaks the final-yes property.

For a fixed profile the cheapest assignment pairs larger probabilities
with smaller depths, so the optimum is a minimum of dot products over the
catalog.  Profiles whose sorted depths are elementwise dominated can
never win, and dropping them at every level of the recurrence keeps the
catalog tiny without losing any optimum.
"""

from __future__ import annotations

import itertools
import os
import threading
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import (
    DepthProfile,
    Distribution,
    Internal,
    Leaf,
    Node,
    average_depth,
    iter_leaves,
)
from .entropy import grouping_decompose
from .errors import DomainError, LimitExceededError, TooFewObjectsError, UnrealizableProfileError

DEFAULT_LIMIT = 12
LIMIT_ENV = "TQ_MAX_N"

ORACLE_LIMIT = 6


def max_objects(limit: Optional[int] = None) -> int:
    """The configured object cap: explicit argument, TQ_MAX_N, or 12."""
    if limit is not None:
        return limit
    raw = os.environ.get(LIMIT_ENV)
    if raw:
        try:
            value = int(raw)
        except ValueError:
            return DEFAULT_LIMIT
        if value >= 1:
            return value
    return DEFAULT_LIMIT


@dataclass(frozen=True)
class ProfileCatalog:
    n: int
    profiles: tuple[DepthProfile, ...]
    pareto_only: bool


@dataclass(frozen=True)
class OptimalResult:
    tree: Node
    l_yes: float
    profile: DepthProfile


_full_memo: dict[int, frozenset] = {}
_front_memo: dict[int, frozenset] = {}
_witness_memo: dict[DepthProfile, Optional[tuple]] = {}
_feasible_memo: dict[DepthProfile, bool] = {}
_memo_lock = threading.Lock()


def _pareto_front(profiles) -> list[DepthProfile]:
    """Profiles not elementwise dominated by another profile of the set."""
    ordered = sorted(profiles)
    front: list[DepthProfile] = []
    for i, p in enumerate(ordered):
        dominated = False
        # any dominator sorts lexicographically before p
        for q in ordered[:i]:
            if all(x <= y for x, y in zip(q, p)):
                dominated = True
                break
        if not dominated:
            front.append(p)
    return front


def _profiles(n: int, front_only: bool) -> frozenset:
    memo = _front_memo if front_only else _full_memo
    got = memo.get(n)
    if got is not None:
        return got
    if n == 1:
        result = frozenset({(1,)})
    else:
        acc: set[DepthProfile] = set()
        for a in _profiles(n - 1, front_only):
            acc.add(tuple(sorted((1, *(d + 1 for d in a)))))
        for k in range(1, n // 2 + 1):
            left = [tuple(d + 1 for d in a) for a in _profiles(k, front_only)]
            right = [tuple(d + 1 for d in b) for b in _profiles(n - k, front_only)]
            for sa in left:
                for sb in right:
                    acc.add(tuple(sorted(sa + sb)))
        if front_only:
            acc = set(_pareto_front(acc))
        result = frozenset(acc)
    with _memo_lock:
        memo.setdefault(n, result)
    return memo[n]


def enumerate_profiles(
    n: int, pareto_only: bool = False, limit: Optional[int] = None
) -> ProfileCatalog:
    """All leaf-depth profiles of n-leaf final-yes trees, optionally pruned."""
    if n < 1:
        raise DomainError(f"need at least one object, got n={n}")
    bound = max_objects(limit)
    if n > bound:
        raise LimitExceededError(f"n={n} exceeds the search limit {bound}")
    profiles = tuple(sorted(_profiles(n, pareto_only)))
    return ProfileCatalog(n=n, profiles=profiles, pareto_only=pareto_only)


def _splits(values: DepthProfile) -> Iterator[tuple[DepthProfile, DepthProfile]]:
    """Nonempty two-part splits of a sorted multiset, in a fixed order."""
    distinct = sorted(set(values))
    counts = [sum(1 for v in values if v == d) for d in distinct]
    for take in itertools.product(*(range(c + 1) for c in counts)):
        total = sum(take)
        if total == 0 or total == len(values):
            continue
        left: list[int] = []
        right: list[int] = []
        for d, c, t in zip(distinct, counts, take):
            left.extend([d] * t)
            right.extend([d] * (c - t))
        yield tuple(left), tuple(right)


def _find_witness(profile: DepthProfile) -> Optional[tuple]:
    """A construction recipe for the profile, or None when no tree exists."""
    got = _witness_memo.get(profile, "miss")
    if got != "miss":
        return got
    result: Optional[tuple] = None
    if len(profile) == 0 or min(profile) < 1:
        result = None
    elif profile == (1,):
        result = ("single",)
    elif profile[0] == 1:
        rest = profile[1:]
        if rest and min(rest) >= 2:
            sub = tuple(d - 1 for d in rest)
            if _find_witness(sub) is not None:
                result = ("leaf", sub)
    else:
        dec = tuple(d - 1 for d in profile)
        for a, b in _splits(dec):
            if _find_witness(a) is not None and _find_witness(b) is not None:
                result = ("split", a, b)
                break
    with _memo_lock:
        _witness_memo.setdefault(profile, result)
    return _witness_memo[profile]


def _build_from_witness(profile: DepthProfile) -> Node:
    witness = _find_witness(profile)
    assert witness is not None
    kind = witness[0]
    if kind == "single":
        return Internal(zero=None, one=Leaf(0))
    if kind == "leaf":
        return Internal(zero=_build_from_witness(witness[1]), one=Leaf(0))
    return Internal(
        zero=_build_from_witness(witness[1]), one=_build_from_witness(witness[2])
    )


def _index_by_depth(tree: Node) -> Node:
    """Fresh copy with leaves numbered 0..n-1 by depth, ties in preorder."""
    slots = list(iter_leaves(tree))
    order = sorted(range(len(slots)), key=lambda k: (len(slots[k][1]), k))
    target = {pos: rank for rank, pos in enumerate(order)}
    cursor = itertools.count()

    def rebuild(node: Node) -> Node:
        if isinstance(node, Leaf):
            return Leaf(target[next(cursor)])
        zero = rebuild(node.zero) if node.zero is not None else None
        one = rebuild(node.one) if node.one is not None else None
        return Internal(zero=zero, one=one)

    return rebuild(tree)


def build_tree_from_profile(profile: Sequence[int]) -> Node:
    """A final-yes tree whose sorted leaf depths equal the profile.

    Leaves are numbered 0..n-1 from the shallowest down.  Raises
    UnrealizableProfileError when no tree has these depths.
    """
    normalized = tuple(sorted(int(d) for d in profile))
    if not normalized:
        raise UnrealizableProfileError("empty profile")
    if normalized[0] < 1:
        raise UnrealizableProfileError(f"depths must be positive: {normalized}")
    if _find_witness(normalized) is None:
        raise UnrealizableProfileError(
            f"no final-yes tree has leaf depths {normalized}"
        )
    return _index_by_depth(_build_from_witness(normalized))


def _remap_leaves(tree: Node, mapping: Sequence[int]) -> Node:
    if isinstance(tree, Leaf):
        return Leaf(mapping[tree.index])
    zero = _remap_leaves(tree.zero, mapping) if tree.zero is not None else None
    one = _remap_leaves(tree.one, mapping) if tree.one is not None else None
    return Internal(zero=zero, one=one)


def optimal_yes_tree(dist: Distribution, limit: Optional[int] = None) -> OptimalResult:
    """The cheapest final-yes tree for the distribution.

    Minimizes the profile-probability dot product over the pruned catalog;
    equal-cost profiles resolve to the lexicographically smallest.  Objects
    are assigned in probability order, most probable shallowest.
    """
    bound = max_objects(limit)
    if dist.n > bound:
        raise LimitExceededError(f"n={dist.n} exceeds the search limit {bound}")
    sp = dist.sorted_probs()
    best_cost = None
    best_profile = None
    for profile in _profiles(dist.n, front_only=True):
        cost = sum(p * d for p, d in zip(sp, profile))
        if (
            best_cost is None
            or cost < best_cost
            or (cost == best_cost and profile < best_profile)
        ):
            best_cost = cost
            best_profile = profile
    assert best_profile is not None
    shaped = build_tree_from_profile(best_profile)
    tree = _remap_leaves(shaped, dist.sorted_indices())
    return OptimalResult(tree=tree, l_yes=best_cost, profile=best_profile)


def _one_ended_words(length: int) -> tuple[str, ...]:
    if length == 1:
        return ("1",)
    return tuple(
        format(i, f"0{length - 1}b") + "1" for i in range(2 ** (length - 1))
    )


def _lengths_feasible(lengths: DepthProfile) -> bool:
    """Whether some prefix-free set of 1-terminated words has these lengths."""
    got = _feasible_memo.get(lengths)
    if got is not None:
        return got

    n = len(lengths)

    def extend(idx: int, chosen: tuple[str, ...]) -> bool:
        if idx == n:
            return True
        length = lengths[idx]
        floor = chosen[-1] if chosen and len(chosen[-1]) == length else None
        for word in _one_ended_words(length):
            if floor is not None and word <= floor:
                continue
            if any(word.startswith(prior) for prior in chosen):
                continue
            if extend(idx + 1, chosen + (word,)):
                return True
        return False

    result = extend(0, ())
    with _memo_lock:
        _feasible_memo.setdefault(lengths, result)
    return _feasible_memo[lengths]


def oracle_optimal(dist: Distribution, max_len: Optional[int] = None) -> float:
    """Reference optimum by brute force over codeword sets.

    Enumerates every multiset of codeword lengths a prefix-free set of
    distinct 1-terminated words can realize (lengths capped at max_len,
    default n), and takes the cheapest probability assignment.  Only
    intended for n up to 6; it shares no machinery with the profile
    search above.
    """
    if dist.n > ORACLE_LIMIT:
        raise LimitExceededError(
            f"the brute-force oracle handles at most {ORACLE_LIMIT} objects"
        )
    cap = dist.n if max_len is None else max_len
    if cap < 1:
        raise DomainError(f"max_len must be at least 1, got {cap}")
    sp = dist.sorted_probs()
    best = None
    for lengths in itertools.combinations_with_replacement(range(1, cap + 1), dist.n):
        if not _lengths_feasible(lengths):
            continue
        cost = sum(p * d for p, d in zip(sp, lengths))
        if best is None or cost < best:
            best = cost
    if best is None:
        raise DomainError(f"no prefix-free set of {dist.n} words fits max_len={cap}")
    return best


def build_hat_tree(
    dist: Distribution, limit: Optional[int] = None
) -> tuple[Node, float]:
    """Root the most probable object at codeword "1" and recurse on the rest.

    The 0 subtree is the optimal tree of the renormalized remainder, so the
    average depth satisfies depth = 1 + (1 - top) * depth(remainder).
    """
    if dist.n < 2:
        raise TooFewObjectsError("need at least two objects to split off the top")
    order = dist.sorted_indices()
    split = grouping_decompose(dist)
    sub = optimal_yes_tree(split.conditional, limit=limit)
    mapping = [order[j + 1] for j in range(dist.n - 1)]
    zero_side = _remap_leaves(sub.tree, mapping)
    tree = Internal(zero=zero_side, one=Leaf(order[0]))
    return tree, average_depth(tree, dist)

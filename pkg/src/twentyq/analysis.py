"""Distribution reports, the four-object bar bet, and the gap sweep."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from . import huffman as huffman_mod
from .core import (
    AnalysisReport,
    Distribution,
    average_depth,
    depth_profile,
    validate_distribution,
)
from .entropy import binary_entropy, entropy, grouping_decompose
from .errors import DomainError, TooFewObjectsError, WrongArityError
from .optimal_search import build_hat_tree, max_objects, optimal_yes_tree
from .yes_constraint import augment, relabel_optimally

# Tolerances: BOUND_TOLERANCE forgives float noise on non-strict bounds,
# STRICT_MARGIN is the gap a strict inequality must clear.
BOUND_TOLERANCE = 1e-9
STRICT_MARGIN = 1e-12

# The threshold on the top probability separating the two upper-bound
# arguments: below it the augmented Huffman tree already beats H + 1,
# at or above it the split-off-the-top tree does.
TOP_PROB_THRESHOLD = 0.4

BAR_BET_LABELS = ("alpha", "bravo", "charlie", "delta")
BAR_BET_PROBS = (0.3, 0.3, 0.2, 0.2)


def bar_bet_distribution() -> Distribution:
    """The canonical four-object example: probabilities 3:3:2:2."""
    return validate_distribution(BAR_BET_LABELS, BAR_BET_PROBS)


@dataclass(frozen=True)
class BarBetResult:
    """Average question counts of the two four-leaf tree shapes.

    unary_questions is the chain tree with depths {1,2,3,4} and
    balanced_questions the shape with depths {2,2,3,3}; both assign
    higher probability to shallower leaves.  gap is balanced minus
    unary, which collapses to top minus bottom probability.
    """

    unary_questions: float
    balanced_questions: float
    gap: float
    huffman_balanced: bool


def bar_bet(dist: Distribution) -> BarBetResult:
    if dist.n != 4:
        raise WrongArityError(f"the bar bet needs exactly 4 objects, got {dist.n}")
    p1, p2, p3, p4 = dist.sorted_probs()
    unary = 1.0 + p2 + 2.0 * p3 + 3.0 * p4
    balanced = 2.0 + p3 + p4
    tree = huffman_mod.build_huffman(dist)
    return BarBetResult(
        unary_questions=unary,
        balanced_questions=balanced,
        gap=balanced - unary,
        huffman_balanced=depth_profile(tree) == (2, 2, 2, 2),
    )


@dataclass(frozen=True)
class SweepPoint:
    epsilon: float
    unary_questions: float
    balanced_questions: float
    gap: float
    huffman_balanced: bool


def gap_family(epsilon: float) -> Distribution:
    """Three nearly equal objects and one rare one; the gap is 1/3 - 4e."""
    if not 0.0 < epsilon < 1.0 / 12.0:
        raise DomainError(f"epsilon must lie in (0, 1/12), got {epsilon!r}")
    heavy = 1.0 / 3.0 - epsilon
    return validate_distribution(
        ("x1", "x2", "x3", "x4"), (heavy, heavy, heavy, 3.0 * epsilon)
    )


def max_gap_sweep(epsilons: Sequence[float]) -> list[SweepPoint]:
    """Evaluate the bar bet along the family above, one point per epsilon."""
    points = []
    for epsilon in epsilons:
        result = bar_bet(gap_family(epsilon))
        points.append(
            SweepPoint(
                epsilon=float(epsilon),
                unary_questions=result.unary_questions,
                balanced_questions=result.balanced_questions,
                gap=result.gap,
                huffman_balanced=result.huffman_balanced,
            )
        )
    return points


def sweep_csv(points: Sequence[SweepPoint]) -> str:
    lines = ["epsilon,gap,q1,q2,huffman_balanced"]
    for pt in points:
        lines.append(
            f"{pt.epsilon:.12g},{pt.gap:.12g},{pt.unary_questions:.12g},"
            f"{pt.balanced_questions:.12g},{str(pt.huffman_balanced).lower()}"
        )
    return "\n".join(lines) + "\n"


def analyze(dist: Distribution, limit: Optional[int] = None) -> AnalysisReport:
    """Measure every quantity of interest and check the proved inequalities.

    The report never raises on a violated bound; `bounds_hold` records the
    outcome so callers can escalate (the CLI turns a false entry into exit
    code 2).
    """
    if dist.n < 2:
        raise TooFewObjectsError(
            "analysis needs at least two objects; a single object is always"
            " found with one question"
        )
    bound = max_objects(limit)
    notes: list[str] = []

    h = entropy(dist)
    huff = huffman_mod.build_huffman(dist)
    l_huffman = average_depth(huff, dist)
    augmented = augment(huff, dist)
    l_augmented = l_huffman + augmented.added_cost
    relabeled = relabel_optimally(augmented.tree, dist)
    l_relabeled = average_depth(relabeled, dist)
    optimal = optimal_yes_tree(dist, limit=bound)
    l_yes = optimal.l_yes

    sigma = huffman_mod.gallager_sigma()
    top = dist.sorted_probs()[0]
    rhs = top + sigma

    split = grouping_decompose(dist)
    sub_optimal = optimal_yes_tree(split.conditional, limit=bound)
    _, l_hat = build_hat_tree(dist, limit=bound)
    identity_lhs = l_hat - h
    identity_rhs = 1.0 - binary_entropy(top) + (1.0 - top) * (
        sub_optimal.l_yes - entropy(split.conditional)
    )

    bounds: dict[str, bool] = {}
    bounds["entropy_le_huffman"] = h <= l_huffman + BOUND_TOLERANCE
    bounds["huffman_lt_yes"] = l_yes - l_huffman > STRICT_MARGIN
    bounds["yes_lt_entropy_plus_one"] = h + 1.0 - l_yes > STRICT_MARGIN
    bounds["augment_half_bit"] = augmented.added_cost <= 0.5 + BOUND_TOLERANCE
    bounds["redundancy_bound"] = l_huffman - h <= rhs + BOUND_TOLERANCE
    bounds["hat_identity"] = abs(identity_lhs - identity_rhs) <= BOUND_TOLERANCE
    bounds["yes_le_hat"] = l_yes <= l_hat + BOUND_TOLERANCE
    bounds["yes_le_augmented"] = l_yes <= l_augmented + BOUND_TOLERANCE
    if top >= TOP_PROB_THRESHOLD:
        bounds["hat_gap_bound"] = identity_lhs <= 2.0 - (
            binary_entropy(top) + top
        ) + BOUND_TOLERANCE
        notes.append(
            f"top probability {top:.6g} >= {TOP_PROB_THRESHOLD}: the"
            " split-off-the-top tree certifies the upper bound"
        )
    else:
        notes.append(
            f"top probability {top:.6g} < {TOP_PROB_THRESHOLD}: the augmented"
            " Huffman tree certifies the upper bound"
        )
    if abs(l_huffman - h) <= BOUND_TOLERANCE:
        notes.append("entropy meets the Huffman depth exactly (dyadic probabilities)")
    if l_relabeled < l_augmented - BOUND_TOLERANCE:
        notes.append(
            f"relabeling the augmented tree saves"
            f" {l_augmented - l_relabeled:.6g} questions on average"
        )

    return AnalysisReport(
        n=dist.n,
        entropy_bits=h,
        l_huffman=l_huffman,
        l_augmented=l_augmented,
        l_augmented_relabeled=l_relabeled,
        l_yes=l_yes,
        l_hat=l_hat,
        gallager_sigma=sigma,
        gallager_rhs=rhs,
        bounds_hold=bounds,
        notes=tuple(notes),
    )


def report_text(report: AnalysisReport) -> str:
    """Human-readable rendering of an analysis report."""
    lines = [
        f"objects:                       {report.n}",
        f"entropy H:                     {report.entropy_bits:.6f} bits",
        f"Huffman average depth:         {report.l_huffman:.6f}",
        f"augmented (final yes):         {report.l_augmented:.6f}",
        f"augmented, relabeled:          {report.l_augmented_relabeled:.6f}",
        f"optimal final-yes depth:       {report.l_yes:.6f}",
        f"split-top tree depth:          {report.l_hat:.6f}",
        f"redundancy bound p1 + sigma:   {report.gallager_rhs:.6f}",
        f"H + 1:                         {report.entropy_bits + 1.0:.6f}",
    ]
    failures = [name for name, ok in report.bounds_hold.items() if not ok]
    if failures:
        lines.append("VIOLATED: " + ", ".join(failures))
    else:
        lines.append("all bounds hold")
    for note in report.notes:
        lines.append(f"note: {note}")
    return "\n".join(lines) + "\n"

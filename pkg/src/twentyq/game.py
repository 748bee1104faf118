"""Playing twenty questions over a final-yes tree.

A session is an immutable value: `answer` returns the advanced session
and never mutates.  The walker sits on internal nodes only; reaching a
leaf means the answer just given was "yes", so a finished game always
ends on a yes.  Saying "no" at a node with no 0 branch contradicts the
earlier answers and freezes the session in the inconsistent state.
"""

from __future__ import annotations

import secrets
from dataclasses import dataclass, replace
from typing import Optional

from .core import Distribution, Internal, Leaf, Node, average_depth, is_yes_tree, iter_leaves
from .entropy import entropy
from .errors import DimensionMismatchError, DomainError, SessionFinishedError
from .optimal_search import max_objects, optimal_yes_tree

ACTIVE = "active"
WON = "won"
INCONSISTENT = "inconsistent"

# Question phrasing lists at most this many candidate labels.
MAX_LISTED = 5


@dataclass(frozen=True)
class TranscriptEntry:
    question: str
    labels: tuple[str, ...]
    answer: str


@dataclass(frozen=True)
class GameSession:
    id: str
    dist: Distribution
    tree: Node
    current: Optional[Internal]
    state: str
    transcript: tuple[TranscriptEntry, ...]
    won_object: Optional[str]

    @property
    def question_count(self) -> int:
        return len(self.transcript)


def _subtree_labels(node: Node, dist: Distribution) -> tuple[str, ...]:
    return tuple(dist.labels[leaf.index] for leaf, _ in iter_leaves(node))


def question_for(node: Internal, dist: Distribution) -> tuple[str, tuple[str, ...]]:
    """Display text and the full candidate set behind the yes branch."""
    target = node.one
    assert target is not None
    if isinstance(target, Leaf):
        label = dist.labels[target.index]
        return f"Is it {label}?", (label,)
    labels = _subtree_labels(target, dist)
    shown = ", ".join(labels[:MAX_LISTED])
    if len(labels) > MAX_LISTED:
        shown += ", ..."
    return f"Is your object one of {shown}?", labels


def current_question(session: GameSession) -> Optional[str]:
    if session.state != ACTIVE:
        return None
    assert session.current is not None
    return question_for(session.current, session.dist)[0]


def start_session(
    session_dist: Distribution,
    tree: Optional[Node] = None,
    limit: Optional[int] = None,
) -> GameSession:
    """Open a game on the optimal tree (or a supplied final-yes tree)."""
    if tree is None:
        tree = optimal_yes_tree(session_dist, limit=max_objects(limit)).tree
    else:
        if not is_yes_tree(tree):
            raise DomainError("custom game trees must keep every leaf on a 1 edge")
        average_depth(tree, session_dist)  # dimension check
    assert isinstance(tree, Internal)
    return GameSession(
        id=secrets.token_hex(16),
        dist=session_dist,
        tree=tree,
        current=tree,
        state=ACTIVE,
        transcript=(),
        won_object=None,
    )


def answer(session: GameSession, reply: str) -> GameSession:
    """Advance by one yes/no answer; raises once the game has ended."""
    if session.state != ACTIVE:
        raise SessionFinishedError(f"session is already {session.state}")
    if reply not in ("yes", "no"):
        raise DomainError(f'answers are "yes" or "no", got {reply!r}')
    node = session.current
    assert node is not None
    text, labels = question_for(node, session.dist)
    transcript = session.transcript + (TranscriptEntry(text, labels, reply),)
    if reply == "yes":
        target = node.one
        assert target is not None
        if isinstance(target, Leaf):
            return replace(
                session,
                current=None,
                state=WON,
                transcript=transcript,
                won_object=session.dist.labels[target.index],
            )
        return replace(session, current=target, transcript=transcript)
    target = node.zero
    if target is None:
        # Every remaining object sat behind the yes branch.
        return replace(session, current=None, state=INCONSISTENT, transcript=transcript)
    assert isinstance(target, Internal)  # a leaf on a 0 edge would end in "no"
    return replace(session, current=target, transcript=transcript)


@dataclass(frozen=True)
class ExpectedQuestions:
    l_yes: float
    entropy_bits: Optional[float]
    entropy_plus_one: Optional[float]


def expected_questions(session: GameSession) -> ExpectedQuestions:
    """Scoreboard numbers: average questions and, for n >= 2, the entropy bracket."""
    l = average_depth(session.tree, session.dist)
    if session.dist.n < 2:
        return ExpectedQuestions(l_yes=l, entropy_bits=None, entropy_plus_one=None)
    h = entropy(session.dist)
    return ExpectedQuestions(l_yes=l, entropy_bits=h, entropy_plus_one=h + 1.0)


def honest_reply(session: GameSession, target_label: str) -> str:
    """The truthful answer to the pending question for a fixed object."""
    if session.state != ACTIVE:
        raise SessionFinishedError("no question is pending")
    if target_label not in session.dist.labels:
        raise DimensionMismatchError(f"unknown label {target_label!r}")
    assert session.current is not None
    _, labels = question_for(session.current, session.dist)
    return "yes" if target_label in labels else "no"

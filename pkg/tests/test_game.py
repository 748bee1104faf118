"""The interactive question-answer state machine."""

import numpy as np
import pytest

from twentyq import (
    ACTIVE,
    INCONSISTENT,
    WON,
    Internal,
    Leaf,
    answer,
    bar_bet_distribution,
    build_huffman,
    current_question,
    entropy,
    expected_questions,
    honest_reply,
    leaf_depths,
    optimal_yes_tree,
    start_session,
    validate_distribution,
)
from twentyq.errors import (
    DimensionMismatchError,
    DomainError,
    SessionFinishedError,
)


def play_out(session, replies):
    for reply in replies:
        session = answer(session, reply)
    return session


def test_session_starts_at_top_question():
    session = start_session(bar_bet_distribution())
    assert session.state == ACTIVE
    assert current_question(session) == "Is it alpha?"
    assert session.question_count == 0
    assert session.transcript == ()


def test_unary_walk_to_last_object():
    session = play_out(start_session(bar_bet_distribution()), ["no", "no", "no", "yes"])
    assert session.state == WON
    assert session.won_object == "delta"
    assert session.question_count == 4
    assert session.transcript[-1].answer == "yes"
    assert current_question(session) is None


def test_first_yes_wins_immediately():
    session = play_out(start_session(bar_bet_distribution()), ["yes"])
    assert session.state == WON
    assert session.won_object == "alpha"
    assert session.question_count == 1


def test_all_no_is_inconsistent():
    session = play_out(start_session(bar_bet_distribution()), ["no", "no", "no", "no"])
    assert session.state == INCONSISTENT
    assert session.won_object is None
    assert session.question_count == 4


def test_answer_validation():
    session = start_session(bar_bet_distribution())
    with pytest.raises(DomainError):
        answer(session, "maybe")
    done = play_out(session, ["yes"])
    with pytest.raises(SessionFinishedError):
        answer(done, "no")


def test_sessions_are_values():
    first = start_session(bar_bet_distribution())
    second = answer(first, "no")
    # advancing returns a new session; the original is untouched
    assert first.question_count == 0
    assert second.question_count == 1
    assert first.id == second.id


def test_session_ids_differ():
    a = start_session(bar_bet_distribution())
    b = start_session(bar_bet_distribution())
    assert a.id != b.id
    assert len(a.id) == 32


def test_custom_tree_must_end_in_yes():
    dist = bar_bet_distribution()
    with pytest.raises(DomainError):
        start_session(dist, tree=build_huffman(dist))


def test_custom_tree_dimension_check():
    dist = validate_distribution(("a", "b"), (0.5, 0.5))
    tree = optimal_yes_tree(bar_bet_distribution()).tree
    with pytest.raises(DimensionMismatchError):
        start_session(dist, tree=tree)


def test_group_question_lists_candidates():
    dist = validate_distribution(("a", "b", "c", "d"), (0.3, 0.3, 0.2, 0.2))
    # root with a two-leaf subtree behind yes
    tree = Internal(
        zero=Internal(zero=Internal(one=Leaf(0)), one=Leaf(1)),
        one=Internal(zero=Internal(one=Leaf(2)), one=Leaf(3)),
    )
    session = start_session(dist, tree=tree)
    assert current_question(session) == "Is your object one of c, d?"
    assert honest_reply(session, "c") == "yes"
    assert honest_reply(session, "a") == "no"


def test_group_question_truncates_after_five():
    n = 7
    dist = validate_distribution(
        tuple(f"x{i + 1}" for i in range(n)), (1 / n,) * n
    )
    chain = Internal(one=Leaf(5))
    for index in (4, 3, 2, 1, 0):
        chain = Internal(zero=chain, one=Leaf(index))
    tree = Internal(zero=Internal(one=Leaf(6)), one=chain)
    session = start_session(dist, tree=tree)
    # candidates appear in codeword order, zero branch first
    assert current_question(session) == "Is your object one of x6, x5, x4, x3, x2, ...?"
    # the transcript keeps the full candidate list
    advanced = answer(session, "no")
    assert advanced.transcript[0].labels == ("x6", "x5", "x4", "x3", "x2", "x1")


def test_expected_questions_bar_bet():
    stats = expected_questions(start_session(bar_bet_distribution()))
    assert stats.l_yes == pytest.approx(2.3, abs=1e-12)
    assert stats.entropy_bits == pytest.approx(1.9709505944546686, abs=1e-12)
    assert stats.entropy_plus_one == pytest.approx(2.9709505944546686, abs=1e-12)


def test_expected_questions_single_object():
    stats = expected_questions(start_session(validate_distribution(("a",), (1.0,))))
    assert stats.l_yes == pytest.approx(1.0, abs=1e-12)
    assert stats.entropy_bits is None
    assert stats.entropy_plus_one is None


def test_honest_reply_errors():
    session = start_session(bar_bet_distribution())
    with pytest.raises(DimensionMismatchError):
        honest_reply(session, "zebra")
    done = play_out(session, ["yes"])
    with pytest.raises(SessionFinishedError):
        honest_reply(done, "alpha")


def test_honest_play_reaches_every_object(make_dist):
    rng = np.random.default_rng(61)
    for _ in range(20):
        n = int(rng.integers(2, 11))
        dist = make_dist(rng, n)
        result = optimal_yes_tree(dist)
        depths = leaf_depths(result.tree)
        for index, label in enumerate(dist.labels):
            session = start_session(dist, tree=result.tree)
            while session.state == ACTIVE:
                session = answer(session, honest_reply(session, label))
            assert session.state == WON
            assert session.won_object == label
            assert session.question_count == depths[index]
            assert session.transcript[-1].answer == "yes"


def test_won_requires_final_yes(make_dist):
    # random replies: a game can end won or inconsistent, never won on a no
    rng = np.random.default_rng(62)
    for _ in range(50):
        dist = make_dist(rng, int(rng.integers(2, 9)))
        session = start_session(dist)
        while session.state == ACTIVE:
            session = answer(session, "yes" if rng.random() < 0.5 else "no")
        if session.state == WON:
            assert session.transcript[-1].answer == "yes"
        else:
            assert session.state == INCONSISTENT
            assert session.transcript[-1].answer == "no"


def test_entropy_matches_module():
    dist = bar_bet_distribution()
    stats = expected_questions(start_session(dist))
    assert stats.entropy_bits == pytest.approx(entropy(dist), abs=1e-15)

"""The tq command line tool.

Exit codes: 0 on success, 1 on any input or usage problem, 2 when a
proved bound fails on a concrete distribution (the counterexample is
printed so it can be filed).  Errors go to stderr prefixed "error:".
"""

from __future__ import annotations

import json
import sys
from typing import IO, Optional

import click

from . import analysis, game
from .core import (
    Distribution,
    average_depth,
    codewords,
    load_distribution,
    to_dot,
)
from .entropy import entropy
from .errors import BoundViolationError, TwentyQError, ValidationError
from .huffman import build_huffman
from .optimal_search import build_hat_tree, max_objects, optimal_yes_tree
from .yes_constraint import augment, relabel_optimally


def _load(path: str, normalize: bool) -> Distribution:
    try:
        return load_distribution(path, normalize=normalize)
    except FileNotFoundError:
        raise ValidationError(f"input not found: {path}")
    except json.JSONDecodeError as exc:
        raise ValidationError(f"invalid JSON in {path}: {exc}")


def _print_tree(tree, dist: Distribution, heading: str) -> None:
    click.echo(heading)
    words = codewords(tree)
    for i, word in sorted(enumerate(words), key=lambda iw: (len(iw[1]), iw[1])):
        click.echo(f"  {dist.labels[i]:<20} p={dist.probs[i]:<10.6g} {word}")
    click.echo(f"  average questions: {average_depth(tree, dist):.6f}")


def _maybe_dot(tree, dist: Distribution, dot_path: Optional[str]) -> None:
    if dot_path:
        with open(dot_path, "w", encoding="utf-8") as handle:
            handle.write(to_dot(tree, dist))
        click.echo(f"wrote {dot_path}")


def _check_report(report, dist: Distribution) -> None:
    if not report.all_hold:
        failed = [name for name, ok in report.bounds_hold.items() if not ok]
        raise BoundViolationError(
            f"bound(s) {', '.join(failed)} failed on {json.dumps(dist.to_json())}"
        )


@click.group()
def cli() -> None:
    """Question trees for games that always end with a yes."""


@cli.command()
@click.argument("path")
@click.option("--json", "as_json", is_flag=True, help="Emit the report as JSON.")
@click.option("--normalize", is_flag=True, help="Rescale probabilities to sum to 1.")
def analyze(path: str, as_json: bool, normalize: bool) -> None:
    """Full report for the distribution in PATH."""
    dist = _load(path, normalize)
    report = analysis.analyze(dist)
    if as_json:
        click.echo(json.dumps(report.to_json(), indent=2))
    else:
        click.echo(analysis.report_text(report), nl=False)
    _check_report(report, dist)


@cli.command()
@click.argument("path")
@click.option("--dot", "dot_path", default=None, help="Write the tree as DOT.")
@click.option("--normalize", is_flag=True)
def huffman(path: str, dot_path: Optional[str], normalize: bool) -> None:
    """Huffman tree for the distribution in PATH (no final-yes constraint)."""
    dist = _load(path, normalize)
    tree = build_huffman(dist)
    _print_tree(tree, dist, "Huffman tree")
    _maybe_dot(tree, dist, dot_path)


@cli.command()
@click.argument("path")
@click.option("--dot", "dot_path", default=None, help="Write the tree as DOT.")
@click.option("--normalize", is_flag=True)
def optimal(path: str, dot_path: Optional[str], normalize: bool) -> None:
    """Cheapest final-yes tree for the distribution in PATH."""
    dist = _load(path, normalize)
    result = optimal_yes_tree(dist, limit=max_objects())
    _print_tree(result.tree, dist, "optimal final-yes tree")
    click.echo(f"  depth profile: {list(result.profile)}")
    _maybe_dot(result.tree, dist, dot_path)


@cli.command("augment")
@click.argument("path")
@click.option("--relabel", is_flag=True, help="Reassign objects by probability.")
@click.option("--dot", "dot_path", default=None, help="Write the tree as DOT.")
@click.option("--normalize", is_flag=True)
def augment_cmd(path: str, relabel: bool, dot_path: Optional[str], normalize: bool) -> None:
    """Append yes branches to the Huffman tree so every game ends with yes."""
    dist = _load(path, normalize)
    base = build_huffman(dist)
    result = augment(base, dist)
    tree = result.tree
    if relabel:
        tree = relabel_optimally(tree, dist)
    _print_tree(tree, dist, "augmented Huffman tree")
    click.echo(f"  added cost: {result.added_cost:.6f}  sibling swaps: {result.swaps}")
    _maybe_dot(tree, dist, dot_path)


@cli.command()
@click.option(
    "--sweep",
    "sweep_spec",
    default=None,
    help="Comma-separated epsilons; prints CSV for the 1/3-gap family.",
)
def barbet(sweep_spec: Optional[str]) -> None:
    """The four-object bar bet, or a sweep toward the 1/3 gap."""
    if sweep_spec is not None:
        try:
            epsilons = [float(part) for part in sweep_spec.split(",") if part.strip()]
        except ValueError:
            raise ValidationError(f"bad sweep list: {sweep_spec!r}")
        if not epsilons:
            raise ValidationError("empty sweep list")
        points = analysis.max_gap_sweep(epsilons)
        click.echo(analysis.sweep_csv(points), nl=False)
        return
    dist = analysis.bar_bet_distribution()
    result = analysis.bar_bet(dist)
    click.echo(f"distribution:        {json.dumps(dist.to_json())}")
    click.echo(f"unary tree:          {result.unary_questions:.6f} questions")
    click.echo(f"balanced tree:       {result.balanced_questions:.6f} questions")
    click.echo(f"gap (balanced-unary): {result.gap:.6f}")
    click.echo(f"huffman balanced:    {str(result.huffman_balanced).lower()}")


@cli.command()
@click.argument("path")
@click.option("--normalize", is_flag=True)
def play(path: str, normalize: bool) -> None:
    """Play the game on a terminal: think of an object, answer the questions."""
    dist = _load(path, normalize)
    code = run_game(dist, sys.stdin, sys.stdout)
    if code:
        raise ValidationError("input ended before the game finished")


def run_game(dist: Distribution, stream: IO[str], out: IO[str]) -> int:
    session = game.start_session(dist, limit=max_objects())
    stats = game.expected_questions(session)
    print(f"{dist.n} objects; expected questions {stats.l_yes:.4f}", file=out)
    if stats.entropy_bits is not None:
        print(
            f"entropy bracket: {stats.entropy_bits:.4f}"
            f" <= questions < {stats.entropy_plus_one:.4f}",
            file=out,
        )
    while session.state == game.ACTIVE:
        print(f"Q{session.question_count + 1}: {game.current_question(session)} [y/n] ", file=out)
        line = stream.readline()
        if line == "":
            return 1
        reply = line.strip().lower()
        if reply in ("y", "yes"):
            session = game.answer(session, "yes")
        elif reply in ("n", "no"):
            session = game.answer(session, "no")
        else:
            print('please answer "y" or "n"', file=out)
    if session.state == game.WON:
        print(
            f"It's {session.won_object}! Found in {session.question_count}"
            " questions, and the last answer was yes.",
            file=out,
        )
    else:
        print(
            "These answers contradict each other: every object was ruled out."
            f" ({session.question_count} questions asked.)",
            file=out,
        )
    return 0


@cli.command()
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--dist", "dist_path", default=None, help="Register PATH as preset 'default'.")
@click.option("--static", "static_dir", default=None, help="Directory served at /.")
def serve(port: int, host: str, dist_path: Optional[str], static_dir: Optional[str]) -> None:
    """Run the HTTP API (and web UI when --static points at a build)."""
    import uvicorn

    from .server import create_app

    presets = {}
    if dist_path:
        presets["default"] = _load(dist_path, normalize=False)
    app = create_app(static_dir=static_dir, presets=presets)
    uvicorn.run(app, host=host, port=port)


@cli.command()
@click.option("--random", "count", default=100, show_default=True, help="Distributions to draw.")
@click.option("--n", "size", default=6, show_default=True, help="Objects per distribution.")
@click.option("--seed", default=0, show_default=True)
@click.option("--csv", "as_csv", is_flag=True, help="Emit one CSV row per distribution.")
def sweep(count: int, size: int, seed: int, as_csv: bool) -> None:
    """Check the proved bounds on random distributions; exit 2 on a violation."""
    import numpy

    if count < 1:
        raise ValidationError("--random must be at least 1")
    if not 2 <= size <= max_objects():
        raise ValidationError(f"--n must lie in 2..{max_objects()}")
    rng = numpy.random.default_rng(seed)
    rows = []
    worst_upper = None
    for idx in range(count):
        probs = rng.dirichlet(numpy.ones(size))
        dist = Distribution(
            tuple(f"x{i + 1}" for i in range(size)),
            tuple(float(p) for p in probs),
        )
        report = analysis.analyze(dist)
        margin = report.entropy_bits + 1.0 - report.l_yes
        rows.append((idx, report))
        if worst_upper is None or margin < worst_upper:
            worst_upper = margin
        _check_report(report, dist)
    if as_csv:
        click.echo("index,entropy,l_huffman,l_yes,upper_margin,all_hold")
        for idx, report in rows:
            click.echo(
                f"{idx},{report.entropy_bits:.12g},{report.l_huffman:.12g},"
                f"{report.l_yes:.12g},"
                f"{report.entropy_bits + 1.0 - report.l_yes:.12g},"
                f"{str(report.all_hold).lower()}"
            )
    click.echo(
        f"checked {count} random distributions (n={size}, seed={seed}):"
        f" all bounds hold; smallest H+1 margin {worst_upper:.6g}"
    )


def main(argv: Optional[list[str]] = None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.exceptions.Exit as exc:  # --help and friends
        return int(exc.exit_code)
    except click.Abort:
        return 130
    except click.UsageError as exc:
        print(f"error: {exc.format_message()}", file=sys.stderr)
        return 1
    except click.ClickException as exc:
        print(f"error: {exc.format_message()}", file=sys.stderr)
        return 1
    except BoundViolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TwentyQError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())

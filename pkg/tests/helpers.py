"""Shared test utilities.

The point of this module is independence: expected values come from plain
Python booleans and a second, hand-written table of the sixteen binary
operations, so the package's own evaluator is never used to check itself.
"""

from __future__ import annotations

import io
import random
from contextlib import contextmanager, redirect_stderr, redirect_stdout
from itertools import product

from illation.cli import main
from illation.core import (
    Binary,
    Constant,
    Formula,
    Negation,
    TruthValue,
    Variable,
    connective,
    variables_of,
)

# Independent truth functions for all sixteen binary operations, written
# with Python's own boolean operators.
BOOL_OPS = {
    "constant-false": lambda p, q: False,
    "nor": lambda p, q: not (p or q),
    "converse-nonimplication": lambda p, q: (not p) and q,
    "nonimplication": lambda p, q: p and (not q),
    "conjunction": lambda p, q: p and q,
    "left-projection": lambda p, q: p,
    "right-projection": lambda p, q: q,
    "equivalence": lambda p, q: p == q,
    "exclusive-disjunction": lambda p, q: p != q,
    "right-negation": lambda p, q: not q,
    "left-negation": lambda p, q: not p,
    "nand": lambda p, q: not (p and q),
    "implication": lambda p, q: (not p) or q,
    "converse-implication": lambda p, q: p or (not q),
    "disjunction": lambda p, q: p or q,
    "constant-true": lambda p, q: True,
}


def eval_bool(formula: Formula, env: dict[str, bool]) -> bool:
    """Reference evaluator over plain bools."""
    if isinstance(formula, Constant):
        return formula.value is TruthValue.T
    if isinstance(formula, Variable):
        return env[formula.name]
    if isinstance(formula, Negation):
        return not eval_bool(formula.operand, env)
    assert isinstance(formula, Binary)
    return BOOL_OPS[formula.connective.name](
        eval_bool(formula.left, env), eval_bool(formula.right, env)
    )


def brute_force_kind(formula: Formula) -> str:
    """Classify by exhaustive evaluation with the reference evaluator."""
    names = variables_of(formula)
    outcomes = {
        eval_bool(formula, dict(zip(names, values)))
        for values in product((True, False), repeat=len(names))
    }
    if outcomes == {True}:
        return "tautology"
    if outcomes == {False}:
        return "contradiction"
    return "contingent"


def to_value(flag: bool) -> TruthValue:
    return TruthValue.T if flag else TruthValue.F


# Names safe in every notation (none is a reserved constant anywhere).
SAFE_NAMES = ("p", "q", "r", "x", "y", "z")

# Connectives primitive in every notation, so rendering never rewrites them.
PORTABLE_CONNECTIVES = ("implication", "conjunction", "disjunction")


def random_formula(
    rng: random.Random,
    max_depth: int,
    names: tuple[str, ...] = SAFE_NAMES,
    connective_names: tuple[str, ...] = PORTABLE_CONNECTIVES,
    constants: bool = True,
) -> Formula:
    """Seeded random formula; leaf probability grows as depth runs out."""
    if max_depth == 0 or rng.random() < 0.2:
        if constants and rng.random() < 0.15:
            return Constant(rng.choice((TruthValue.T, TruthValue.F)))
        return Variable(rng.choice(names))
    if rng.random() < 0.25:
        return Negation(
            random_formula(rng, max_depth - 1, names, connective_names, constants)
        )
    return Binary(
        connective(rng.choice(connective_names)),
        random_formula(rng, max_depth - 1, names, connective_names, constants),
        random_formula(rng, max_depth - 1, names, connective_names, constants),
    )


def run_cli(*argv: str) -> tuple[int, str, str]:
    """Invoke the CLI in-process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        try:
            code = main(list(argv))
        except SystemExit as exc:  # argparse usage errors and --version
            code = exc.code if isinstance(exc.code, int) else 2
    return code, out.getvalue(), err.getvalue()


# Acceptance reporting: each criterion test records exactly one line here;
# conftest.py echoes them in a terminal-summary section at the end of the run.
CRITERION_LINES: list[str] = []


@contextmanager
def criterion(number: int, description: str):
    """Record `criterion N: PASS/FAIL` around a block of assertions."""
    try:
        yield
    except BaseException:
        CRITERION_LINES.append(f"criterion {number}: FAIL - {description}")
        raise
    CRITERION_LINES.append(f"criterion {number}: PASS - {description}")
    print(CRITERION_LINES[-1])

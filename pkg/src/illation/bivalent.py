"""Two-valued evaluation: truth tables, connective matrices, classification,
and entailment checking.

Canonical row order for truth tables puts t before f with the leftmost
variable varying slowest, so two variables enumerate (t,t), (t,f), (f,t),
(f,f).  The 1883-84 list form enumerates the other way around, which is why
table builders accept a row-order override.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .core import (
    Binary,
    Connective,
    Constant,
    Formula,
    Negation,
    TruthValue,
    Variable,
    variables_of,
)

Assignment = dict[str, TruthValue]

#: Combined variable cap for exhaustive-enumeration operations.
DEFAULT_VARIABLE_LIMIT = 20

ROW_ORDERS = ("t-first", "f-first")


class MissingVariableError(Exception):
    def __init__(self, name: str):
        super().__init__(f"unbound variable: {name}")
        self.name = name


class VariableLimitError(Exception):
    def __init__(self, count: int, limit: int):
        super().__init__(f"{count} variables exceed the limit of {limit}")
        self.count = count
        self.limit = limit


def evaluate(formula: Formula, assignment: Mapping[str, TruthValue]) -> TruthValue:
    """Evaluate under an assignment covering every variable of the formula."""
    match formula:
        case Constant(value):
            return value
        case Variable(name):
            try:
                return assignment[name]
            except KeyError:
                raise MissingVariableError(name) from None
        case Negation(operand):
            return evaluate(operand, assignment).opposite()
        case Binary(connective, left, right):
            return connective.apply(
                evaluate(left, assignment), evaluate(right, assignment)
            )
    raise TypeError(f"not a formula: {formula!r}")


def assignments(
    variables: Sequence[str], row_order: str = "t-first"
) -> Iterable[Assignment]:
    """All assignments over `variables`, leftmost variable varying slowest."""
    if row_order not in ROW_ORDERS:
        raise ValueError(f"row_order must be one of {ROW_ORDERS}, got {row_order!r}")
    values = (TruthValue.T, TruthValue.F)
    if row_order == "f-first":
        values = (TruthValue.F, TruthValue.T)
    for combo in product(values, repeat=len(variables)):
        yield dict(zip(variables, combo))


@dataclass(frozen=True)
class TruthTable:
    variables: tuple[str, ...]
    rows: tuple[tuple[Assignment, TruthValue], ...]
    row_order: str = "t-first"


def _check_limit(names: Sequence[str], limit: int) -> None:
    if len(names) > limit:
        raise VariableLimitError(len(names), limit)


def truth_table(
    formula: Formula,
    row_order: str = "t-first",
    limit: int = DEFAULT_VARIABLE_LIMIT,
) -> TruthTable:
    """Full truth table; a closed formula yields one empty-assignment row."""
    names = variables_of(formula)
    _check_limit(names, limit)
    rows = tuple(
        (a, evaluate(formula, a)) for a in assignments(names, row_order)
    )
    return TruthTable(tuple(names), rows, row_order)


@dataclass(frozen=True)
class MatrixTable:
    """Two-by-two grid for a binary connective: rows are the antecedent
    (left operand) value, columns the consequent, both ordered t then f."""

    connective: Connective
    cells: tuple[tuple[TruthValue, TruthValue], tuple[TruthValue, TruthValue]]


def matrix_table(connective: Connective) -> MatrixTable:
    v = connective.vector
    return MatrixTable(connective, ((v[0], v[1]), (v[2], v[3])))


def format_matrix(matrix: MatrixTable) -> str:
    """Render the two-by-two grid in the 1893 layout."""
    lines = ["  | t f"]
    for label, row in zip("tf", matrix.cells):
        lines.append(f"{label} | " + " ".join(v.value for v in row))
    return "\n".join(lines)


def format_truth_table(
    table: TruthTable,
    header: str,
    symbols: tuple[str, str] = ("t", "f"),
) -> str:
    """Plain-text table: variable columns, a separator bar, the formula value."""
    t_sym, f_sym = symbols

    def sym(v: TruthValue) -> str:
        return t_sym if v is TruthValue.T else f_sym

    widths = [max(len(name), 1) for name in table.variables]
    head_cells = [name.ljust(w) for name, w in zip(table.variables, widths)]
    lines = [(" ".join(head_cells) + " | " + header).rstrip() if head_cells
             else "| " + header]
    for assignment, value in table.rows:
        cells = [
            sym(assignment[name]).ljust(w)
            for name, w in zip(table.variables, widths)
        ]
        prefix = " ".join(cells) + " | " if cells else "| "
        lines.append(prefix + sym(value))
    return "\n".join(lines)


@dataclass(frozen=True)
class Verdict:
    """Classification of a formula with deterministic witnesses: the first row
    in canonical order falsifying it (absent for tautologies) and the first
    satisfying it (absent for contradictions)."""

    kind: str  # "tautology" | "contradiction" | "contingent"
    falsifying: Assignment | None
    satisfying: Assignment | None


def classify(formula: Formula, limit: int = DEFAULT_VARIABLE_LIMIT) -> Verdict:
    names = variables_of(formula)
    _check_limit(names, limit)
    falsifying: Assignment | None = None
    satisfying: Assignment | None = None
    for a in assignments(names):
        if evaluate(formula, a) is TruthValue.T:
            if satisfying is None:
                satisfying = a
        elif falsifying is None:
            falsifying = a
    if falsifying is None:
        kind = "tautology"
    elif satisfying is None:
        kind = "contradiction"
    else:
        kind = "contingent"
    return Verdict(kind, falsifying, satisfying)


@dataclass(frozen=True)
class EntailmentResult:
    valid: bool
    counterexample: Assignment | None


def entails(
    premises: Sequence[Formula],
    conclusion: Formula,
    limit: int = DEFAULT_VARIABLE_LIMIT,
) -> EntailmentResult:
    """Semantic entailment over the combined variables of premises and
    conclusion; the counterexample, if any, is the first row in canonical
    order making every premise true and the conclusion false."""
    names: dict[str, None] = {}
    for p in premises:
        for name in variables_of(p):
            names.setdefault(name, None)
    for name in variables_of(conclusion):
        names.setdefault(name, None)
    ordered = list(names)
    _check_limit(ordered, limit)
    for a in assignments(ordered):
        if all(evaluate(p, a) is TruthValue.T for p in premises) and (
            evaluate(conclusion, a) is TruthValue.F
        ):
            return EntailmentResult(False, a)
    return EntailmentResult(True, None)

"""Abbreviated (indirect) truth tables.

The method assumes the target formula false and propagates what that forces
onto its subformulas instead of tabulating every assignment.  Columns are the
distinct subformulas in post-order (innermost first, whole formula last); a
dash marks a column the reasoning never needed to constrain — the manuscript
tables show exactly such dash-bearing rows.

Rules applied to a constrained column:

* a constant closes the branch if constrained to the other value;
* negation: !P = w forces P = opposite(w);
* binary: for c(P,Q) = w let S be the input pairs on which c outputs w.
  If every pair in S agrees on P (or on Q), that operand is forced; a
  singleton S forces both.  Otherwise the node splits into cases, built by
  walking S in the canonical pair order (t,t), (t,f), (f,t), (f,f): a pair
  whose P-value admits both Q-values inside S contributes the case "P = p
  alone" (Q stays unconstrained), symmetrically for Q, and any other pair
  contributes the two-sided case; duplicate cases are dropped.  The one-sided
  cases are what leave dashes behind.

A branch closes when some column would be bound to both values.  The source
tables show only forced rows; case splitting is an addition here, since
without it the method cannot decide every formula.  Branches are explored
depth-first in the order generated, closed branches stay in the trace, and
the first open branch supplies the countermodel (exploration stops there).
Unconstrained variables may be completed arbitrarily: evaluation still
yields f.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    Binary,
    Constant,
    Formula,
    INPUT_PAIRS,
    Negation,
    TruthValue,
    Variable,
    subformulas,
    variables_of,
)
from .notation import SyntaxConfig, display_width, pad_display, render, value_symbols

NOTE_ROOT = "root-assumption"
NOTE_FORCED = "forced"
NOTE_BRANCH_OPEN = "branch-open"
NOTE_BRANCH_CLOSED = "branch-closed"


@dataclass(frozen=True)
class TraceStep:
    """Snapshot of every column after one rule application (None = dash)."""

    values: tuple[TruthValue | None, ...]
    note: str


@dataclass(frozen=True)
class IndirectTrace:
    columns: tuple[Formula, ...]
    steps: tuple[TraceStep, ...]


@dataclass(frozen=True)
class IndirectResult:
    outcome: str  # "tautology" | "falsifiable"
    countermodel: dict[str, TruthValue] | None
    unconstrained: tuple[str, ...]
    trace: IndirectTrace


def indirect_check(formula: Formula) -> IndirectResult:
    columns = subformulas(formula)
    index = {sub: i for i, sub in enumerate(columns)}
    root = len(columns) - 1
    steps: list[TraceStep] = []
    open_values: list[list[TruthValue | None]] = []

    def derive(values: list[TruthValue | None], j: int, v: TruthValue) -> bool | None:
        """Bind column j to v; True = newly bound, None = already so,
        False = contradiction."""
        current = values[j]
        if current is v:
            return None
        if current is not None:
            return False
        values[j] = v
        return True

    def cases_of(node: Binary, w: TruthValue) -> list[tuple[tuple[int, TruthValue], ...]]:
        support = [
            pair
            for pair, out in zip(INPUT_PAIRS, node.connective.vector)
            if out is w
        ]
        in_support = set(support)
        left, right = index[node.left], index[node.right]
        cases: list[tuple[tuple[int, TruthValue], ...]] = []
        for p, q in support:
            if (p, TruthValue.T) in in_support and (p, TruthValue.F) in in_support:
                case = ((left, p),)
            elif (TruthValue.T, q) in in_support and (TruthValue.F, q) in in_support:
                case = ((right, q),)
            else:
                case = ((left, p), (right, q))
            if case not in cases:
                cases.append(case)
        return cases

    def propagate(
        values: list[TruthValue | None], queue: list[int], pending: list[int]
    ) -> bool:
        """Apply forcing rules until quiet; False when the branch closed."""
        while queue:
            i = queue.pop(0)
            node = columns[i]
            w = values[i]
            if isinstance(node, Variable):
                continue
            if isinstance(node, Constant):
                if node.value is not w:
                    steps.append(TraceStep(tuple(values), NOTE_BRANCH_CLOSED))
                    return False
                continue
            moved = False
            closed = False
            if isinstance(node, Negation):
                got = derive(values, index[node.operand], w.opposite())
                moved = got is True
                closed = got is False
                if moved:
                    queue.append(index[node.operand])
            else:
                assert isinstance(node, Binary)
                support = [
                    pair
                    for pair, out in zip(INPUT_PAIRS, node.connective.vector)
                    if out is w
                ]
                if not support:
                    steps.append(TraceStep(tuple(values), NOTE_BRANCH_CLOSED))
                    return False
                left_values = {p for p, _ in support}
                right_values = {q for _, q in support}
                for j, agreed in (
                    (index[node.left], left_values),
                    (index[node.right], right_values),
                ):
                    if closed or len(agreed) != 1:
                        continue
                    got = derive(values, j, next(iter(agreed)))
                    if got is True:
                        moved = True
                        queue.append(j)
                    elif got is False:
                        closed = True
                if len(left_values) > 1 and len(right_values) > 1:
                    pending.append(i)
            if moved or closed:
                steps.append(
                    TraceStep(
                        tuple(values),
                        NOTE_BRANCH_CLOSED if closed else NOTE_FORCED,
                    )
                )
            if closed:
                return False
        return True

    def explore(
        values: list[TruthValue | None], queue: list[int], pending: list[int]
    ) -> bool:
        """Depth-first search; True once an open branch has been found."""
        if not propagate(values, queue, pending):
            return False
        if not pending:
            open_values.append(values)
            return True
        node_index, rest = pending[0], pending[1:]
        node = columns[node_index]
        assert isinstance(node, Binary)
        for case in cases_of(node, values[node_index]):
            branch = list(values)
            new_columns: list[int] = []
            closed = False
            for j, v in case:
                got = derive(branch, j, v)
                if got is True:
                    new_columns.append(j)
                elif got is False:
                    closed = True
                    break
            steps.append(
                TraceStep(
                    tuple(branch),
                    NOTE_BRANCH_CLOSED if closed else NOTE_BRANCH_OPEN,
                )
            )
            if closed:
                continue
            if explore(branch, new_columns, list(rest)):
                return True
        return False

    start: list[TruthValue | None] = [None] * len(columns)
    start[root] = TruthValue.F
    steps.append(TraceStep(tuple(start), NOTE_ROOT))
    falsifiable = explore(start, [root], [])
    trace = IndirectTrace(tuple(columns), tuple(steps))
    if not falsifiable:
        return IndirectResult("tautology", None, (), trace)
    final = open_values[0]
    countermodel: dict[str, TruthValue] = {}
    unconstrained: list[str] = []
    for name in variables_of(formula):
        value = final[index[Variable(name)]]
        if value is None:
            unconstrained.append(name)
        else:
            countermodel[name] = value
    return IndirectResult("falsifiable", countermodel, tuple(unconstrained), trace)


def render_trace(trace: IndirectTrace, config: SyntaxConfig = SyntaxConfig()) -> str:
    """Columnar text form of a trace: one header of subformula renderings,
    one line per step, dashes for unconstrained columns, the note last."""
    t_sym, f_sym = value_symbols(config.notation)
    headers = [render(column, config) for column in trace.columns]
    widths = [max(display_width(h), 1) for h in headers]
    lines = [
        "  ".join(pad_display(h, w) for h, w in zip(headers, widths)) + "  | note"
    ]
    for step in trace.steps:
        cells = []
        for value, w in zip(step.values, widths):
            if value is None:
                cell = "-"
            else:
                cell = t_sym if value is TruthValue.T else f_sym
            cells.append(pad_display(cell, w))
        lines.append("  ".join(cells) + "  | " + step.note)
    return "\n".join(lines)

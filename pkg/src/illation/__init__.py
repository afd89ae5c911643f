"""illation: propositional logic over Peirce-era notations.

Formula trees with the full sixteen-connective catalog, four concrete
syntaxes (peirce, schroeder, peano-russell, modern), direct and abbreviated
truth tables, the 1909 triadic matrices, X-frame glyphs, a brute-force
tautology enumerator, and the categorical A/E/I/O scheme.
"""

from .core import (
    CONNECTIVES,
    Binary,
    Connective,
    Constant,
    Formula,
    INPUT_PAIRS,
    Negation,
    TriadicValue,
    TruthValue,
    Variable,
    conj,
    connective,
    connective_from_vector,
    disj,
    equiv,
    implies,
    subformulas,
    variables_of,
)
from .notation import (
    Notation,
    ParseDiagnostic,
    ParseError,
    SyntaxConfig,
    parse,
    render,
    translate,
)
from .bivalent import (
    EntailmentResult,
    MatrixTable,
    MissingVariableError,
    TruthTable,
    VariableLimitError,
    Verdict,
    classify,
    entails,
    evaluate,
    matrix_table,
    truth_table,
)
from .indirect import IndirectResult, IndirectTrace, indirect_check, render_trace
from .trivalent import (
    TriadicTables,
    UnsupportedConnectiveError,
    evaluate3,
    is_tautology3,
    restriction_check,
    truth_table3,
)
from .atlas import (
    EnumerationSpec,
    XFrame,
    enumerate_tautologies,
    identify,
    paper_table,
    render_xframe,
    xframe_of,
)
from .syllogistic import (
    BarbaraForms,
    CategoricalForm,
    QuantifiedFormError,
    as_formula,
    barbara,
    render_categorical,
)

__version__ = "0.1.0"

__all__ = [
    "Binary", "Connective", "Constant", "Formula", "Negation", "Variable",
    "TruthValue", "TriadicValue", "CONNECTIVES", "INPUT_PAIRS",
    "conj", "disj", "equiv", "implies",
    "connective", "connective_from_vector", "subformulas", "variables_of",
    "Notation", "ParseDiagnostic", "ParseError", "SyntaxConfig",
    "parse", "render", "translate",
    "EntailmentResult", "MatrixTable", "MissingVariableError", "TruthTable",
    "VariableLimitError", "Verdict",
    "classify", "entails", "evaluate", "matrix_table", "truth_table",
    "IndirectResult", "IndirectTrace", "indirect_check", "render_trace",
    "TriadicTables", "UnsupportedConnectiveError",
    "evaluate3", "is_tautology3", "restriction_check", "truth_table3",
    "EnumerationSpec", "XFrame",
    "enumerate_tautologies", "identify", "paper_table", "render_xframe",
    "xframe_of",
    "BarbaraForms", "CategoricalForm", "QuantifiedFormError",
    "as_formula", "barbara", "render_categorical",
    "__version__",
]

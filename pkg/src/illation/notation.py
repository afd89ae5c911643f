"""Parsing, rendering and translation across the four supported notations.

Symbol maps (unicode form / ascii form):

================  ============  ===========  ===========  ===========  ==============
notation          implication   negation     conjunction  disjunction  extras
================  ============  ===========  ===========  ===========  ==============
peirce            primary ; -<       macron ; -   . (middle   +            constants v, f
                                (prefix -    dot) ; *
                                on groups)
schroeder         closed-subset prime ' as   middle dot   +            constants 1, 0
                  sign ; =<     postfix      ; *
peano-russell     horseshoe ; > tilde ; ~    middle dot   vee ; |      equivalence
                                             ; .                       triple-bar ; ==
                                                                       constants tee/
                                                                       falsum ; T, F
modern            arrow ; ->    hook-not ; ! wedge ; &    vee ; |      equivalence
                                                                       double-arrow ;
                                                                       <->  constants
                                                                       tee/falsum; T, F
================  ============  ===========  ===========  ===========  ==============

Rules shared by all notations:

* precedence: negation > conjunction > disjunction > implication > equivalence;
* implication and equivalence are right-associative, conjunction and
  disjunction chains parse left-nested;
* juxtaposition is never conjunction -- an explicit mark is always required;
* variable names are letters/digits/underscores starting with a letter, of any
  length, case-sensitive; the constant words of the active notation (v/f, T/F)
  are reserved and never parse as variables;
* round, square and curly brackets are interchangeable on input (each pair
  must match in kind); output uses round brackets only.

The parser accepts both the unicode and the ascii spelling of the active
notation's symbols; the renderer emits exactly one encoding.  Rendering
parenthesizes every compound (binary) proper subformula, which mirrors the
bracketing of the historical displays and makes output reparse exactly.

Notations without a primitive symbol for one of the sixteen connectives render
it through a fixed defining expansion over negation / conjunction /
disjunction / implication (see EXPANSIONS).  Expansion preserves the truth
vector and the left-to-right variable order, so a render/parse round trip is
idempotent from the first rendering onward.
"""

from __future__ import annotations

import enum
import unicodedata
from dataclasses import dataclass
from typing import Callable

from .core import (
    Binary,
    Connective,
    Constant,
    Formula,
    Negation,
    TruthValue,
    Variable,
    conj,
    disj,
    equiv,
    implies,
)

MACRON = "̄"  # combining overbar used by peirce unicode negation
PRIME = "′"


class Notation(enum.Enum):
    PEIRCE = "peirce"
    SCHROEDER = "schroeder"
    PEANO_RUSSELL = "peano-russell"
    MODERN = "modern"

    def __str__(self) -> str:
        return self.value


_ENCODINGS = ("unicode", "ascii")


@dataclass(frozen=True)
class SyntaxConfig:
    notation: Notation = Notation.MODERN
    encoding: str = "unicode"

    def __post_init__(self) -> None:
        if self.encoding not in _ENCODINGS:
            raise ValueError(f"encoding must be one of {_ENCODINGS}, got {self.encoding!r}")


@dataclass(frozen=True)
class ParseDiagnostic:
    position: int
    message: str
    expected: tuple[str, ...] = ()

    def __str__(self) -> str:
        s = f"parse error at position {self.position}: {self.message}"
        if self.expected:
            s += " (expected: " + ", ".join(self.expected) + ")"
        return s


class ParseError(Exception):
    def __init__(self, diagnostic: ParseDiagnostic):
        super().__init__(str(diagnostic))
        self.diagnostic = diagnostic


# ---------------------------------------------------------------------------
# lexing

# token kinds: impl, and, or, equiv, not (prefix), postnot (postfix),
# lparen, rparen, var, const

_INPUT_SYMBOLS: dict[Notation, tuple[tuple[str, str], ...]] = {
    Notation.PEIRCE: (
        ("-<", "impl"), ("≺", "impl"),
        ("·", "and"), ("*", "and"),
        ("+", "or"),
        ("-", "not"), (MACRON, "postnot"),
    ),
    Notation.SCHROEDER: (
        ("=<", "impl"), ("⋐", "impl"), ("⊆", "impl"),
        ("·", "and"), ("*", "and"),
        ("+", "or"),
        (PRIME, "postnot"), ("'", "postnot"),
        ("1", "const:t"), ("0", "const:f"),
    ),
    Notation.PEANO_RUSSELL: (
        ("==", "equiv"), ("≡", "equiv"),
        ("⊃", "impl"), (">", "impl"),
        ("·", "and"), (".", "and"),
        ("∨", "or"), ("|", "or"),
        ("∼", "not"), ("~", "not"),
        ("⊤", "const:t"), ("⊥", "const:f"),
    ),
    Notation.MODERN: (
        ("<->", "equiv"), ("↔", "equiv"),
        ("->", "impl"), ("→", "impl"),
        ("∧", "and"), ("&", "and"),
        ("∨", "or"), ("|", "or"),
        ("¬", "not"), ("!", "not"),
        ("⊤", "const:t"), ("⊥", "const:f"),
    ),
}

#: Constant words reserved per notation (never variables there).
RESERVED_WORDS: dict[Notation, dict[str, TruthValue]] = {
    Notation.PEIRCE: {"v": TruthValue.T, "f": TruthValue.F},
    Notation.SCHROEDER: {},
    Notation.PEANO_RUSSELL: {"T": TruthValue.T, "F": TruthValue.F},
    Notation.MODERN: {"T": TruthValue.T, "F": TruthValue.F},
}

# glyph -> notations that use it, for cross-notation diagnostics
_FOREIGN: dict[str, set[Notation]] = {}
for _n, _syms in _INPUT_SYMBOLS.items():
    for _lit, _kind in _syms:
        if not _kind.startswith("const"):
            _FOREIGN.setdefault(_lit, set()).add(_n)

_OPEN = {"(", "[", "{"}
_CLOSE = {")", "]", "}"}
_MATCHING_CLOSE = {"(": ")", "[": "]", "{": "}"}


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    pos: int
    value: TruthValue | None = None


def _is_name_start(ch: str) -> bool:
    return ch.isascii() and ch.isalpha()


def _is_name_char(ch: str) -> bool:
    return ch.isascii() and (ch.isalnum() or ch == "_")


def _tokenize(text: str, notation: Notation) -> list[_Token]:
    symbols = sorted(_INPUT_SYMBOLS[notation], key=lambda s: -len(s[0]))
    reserved = RESERVED_WORDS[notation]
    tokens: list[_Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPEN:
            tokens.append(_Token("lparen", ch, i))
            i += 1
            continue
        if ch in _CLOSE:
            tokens.append(_Token("rparen", ch, i))
            i += 1
            continue
        matched = False
        for literal, kind in symbols:
            if text.startswith(literal, i):
                if kind.startswith("const:"):
                    value = TruthValue.T if kind.endswith("t") else TruthValue.F
                    tokens.append(_Token("const", literal, i, value))
                else:
                    tokens.append(_Token(kind, literal, i))
                i += len(literal)
                matched = True
                break
        if matched:
            continue
        if _is_name_start(ch):
            j = i + 1
            while j < n and _is_name_char(text[j]):
                j += 1
            word = text[i:j]
            if word in reserved:
                tokens.append(_Token("const", word, i, reserved[word]))
            else:
                tokens.append(_Token("var", word, i))
            i = j
            continue
        owners = sorted(
            other.value
            for glyph, users in _FOREIGN.items()
            if glyph == ch
            for other in users
            if other is not notation
        )
        if owners:
            raise ParseError(ParseDiagnostic(
                i,
                f"{ch!r} is a symbol of the {', '.join(owners)} notation, "
                f"not of {notation.value}",
            ))
        raise ParseError(ParseDiagnostic(i, f"unexpected character {ch!r}"))
    return tokens


# ---------------------------------------------------------------------------
# parsing

_HAS_EQUIV = {Notation.PEANO_RUSSELL, Notation.MODERN}


class _Parser:
    def __init__(self, tokens: list[_Token], notation: Notation, length: int):
        self.tokens = tokens
        self.notation = notation
        self.length = length
        self.i = 0

    def peek(self) -> _Token | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> _Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, expected: tuple[str, ...] = ()) -> "ParseError":
        tok = self.peek()
        pos = tok.pos if tok is not None else self.length
        return ParseError(ParseDiagnostic(pos, message, expected))

    def parse(self) -> Formula:
        node = self.equiv_level()
        tok = self.peek()
        if tok is not None:
            raise self.fail(
                f"unexpected {tok.text!r} after a complete formula",
                ("end of input", "binary operator"),
            )
        return node

    def equiv_level(self) -> Formula:
        left = self.impl_level()
        tok = self.peek()
        if tok is not None and tok.kind == "equiv":
            self.take()
            return equiv(left, self.equiv_level())
        return left

    def impl_level(self) -> Formula:
        left = self.disj_level()
        tok = self.peek()
        if tok is not None and tok.kind == "impl":
            self.take()
            return implies(left, self.impl_level())
        return left

    def disj_level(self) -> Formula:
        node = self.conj_level()
        while (tok := self.peek()) is not None and tok.kind == "or":
            self.take()
            node = disj(node, self.conj_level())
        return node

    def conj_level(self) -> Formula:
        node = self.unary_level()
        while (tok := self.peek()) is not None and tok.kind == "and":
            self.take()
            node = conj(node, self.unary_level())
        return node

    def unary_level(self) -> Formula:
        tok = self.peek()
        if tok is not None and tok.kind == "not":
            self.take()
            return Negation(self.unary_level())
        return self.postfix_level()

    def postfix_level(self) -> Formula:
        node = self.primary()
        while (tok := self.peek()) is not None and tok.kind == "postnot":
            self.take()
            node = Negation(node)
        return node

    def primary(self) -> Formula:
        tok = self.peek()
        expected = ("variable", "constant", "'('")
        if tok is None:
            raise self.fail("formula ends where an operand was expected", expected)
        if tok.kind == "var":
            self.take()
            return Variable(tok.text)
        if tok.kind == "const":
            self.take()
            return Constant(tok.value)
        if tok.kind == "lparen":
            opener = self.take()
            node = self.equiv_level()
            want = _MATCHING_CLOSE[opener.text]
            closing = self.peek()
            if closing is None or closing.kind != "rparen":
                raise self.fail("unbalanced bracket", (f"'{want}'",))
            if closing.text != want:
                raise self.fail(
                    f"mismatched bracket: {opener.text!r} opened at position "
                    f"{opener.pos} is closed by {closing.text!r}",
                    (f"'{want}'",),
                )
            self.take()
            return node
        raise self.fail(f"unexpected {tok.text!r}", expected)


def parse(text: str, config: SyntaxConfig = SyntaxConfig()) -> Formula:
    """Parse `text` under `config` into a formula tree.

    Raises ParseError (carrying a ParseDiagnostic with position, message and
    expected-token list) on empty input, unbalanced brackets, misplaced
    operators, and symbols belonging to a different notation.
    """
    normalized = unicodedata.normalize("NFD", text)
    tokens = _tokenize(normalized, config.notation)
    if not tokens:
        raise ParseError(ParseDiagnostic(0, "empty input", ("formula",)))
    return _Parser(tokens, config.notation, len(normalized)).parse()


# ---------------------------------------------------------------------------
# defining expansions for connectives a notation lacks

def _const_false(p: Formula, q: Formula) -> Formula:
    return conj(conj(p, Negation(p)), q)


def _const_true(p: Formula, q: Formula) -> Formula:
    return disj(disj(p, Negation(p)), q)


#: Defining expansion of every connective that is not primitive everywhere.
#: Each expansion preserves the truth vector and mentions P and Q in order.
EXPANSIONS: dict[str, Callable[[Formula, Formula], Formula]] = {
    "constant-false": _const_false,
    "nor": lambda p, q: Negation(disj(p, q)),
    "converse-nonimplication": lambda p, q: conj(Negation(p), q),
    "nonimplication": lambda p, q: conj(p, Negation(q)),
    "left-projection": lambda p, q: conj(p, disj(q, Negation(q))),
    "right-projection": lambda p, q: conj(disj(p, Negation(p)), q),
    "equivalence": lambda p, q: disj(conj(p, q), conj(Negation(p), Negation(q))),
    "exclusive-disjunction": lambda p, q: disj(conj(p, Negation(q)), conj(Negation(p), q)),
    "right-negation": lambda p, q: conj(disj(p, Negation(p)), Negation(q)),
    "left-negation": lambda p, q: conj(Negation(p), disj(q, Negation(q))),
    "nand": lambda p, q: Negation(conj(p, q)),
    "converse-implication": lambda p, q: disj(p, Negation(q)),
    "constant-true": _const_true,
}

_BASE_PRIMITIVES = {"implication", "conjunction", "disjunction"}

PRIMITIVE_CONNECTIVES: dict[Notation, frozenset[str]] = {
    n: frozenset(_BASE_PRIMITIVES | ({"equivalence"} if n in _HAS_EQUIV else set()))
    for n in Notation
}


def expand_for(formula: Formula, notation: Notation) -> Formula:
    """Rewrite connectives the notation cannot print into their expansions."""
    primitives = PRIMITIVE_CONNECTIVES[notation]
    if isinstance(formula, Negation):
        return Negation(expand_for(formula.operand, notation))
    if isinstance(formula, Binary):
        left = expand_for(formula.left, notation)
        right = expand_for(formula.right, notation)
        if formula.connective.name in primitives:
            return Binary(formula.connective, left, right)
        return EXPANSIONS[formula.connective.name](left, right)
    return formula


# ---------------------------------------------------------------------------
# rendering

@dataclass(frozen=True)
class _RenderSymbols:
    impl: str
    and_: str
    or_: str
    const_t: str
    const_f: str
    equiv: str | None = None
    neg_prefix: str | None = None
    neg_postfix: str | None = None
    macron: bool = False


_RENDER: dict[tuple[Notation, str], _RenderSymbols] = {
    (Notation.PEIRCE, "unicode"): _RenderSymbols(
        "≺", "·", "+", "v", "f", neg_prefix="-", macron=True),
    (Notation.PEIRCE, "ascii"): _RenderSymbols(
        "-<", "*", "+", "v", "f", neg_prefix="-"),
    (Notation.SCHROEDER, "unicode"): _RenderSymbols(
        "⋐", "·", "+", "1", "0", neg_postfix=PRIME),
    (Notation.SCHROEDER, "ascii"): _RenderSymbols(
        "=<", "*", "+", "1", "0", neg_postfix="'"),
    (Notation.PEANO_RUSSELL, "unicode"): _RenderSymbols(
        "⊃", "·", "∨", "⊤", "⊥",
        equiv="≡", neg_prefix="∼"),
    (Notation.PEANO_RUSSELL, "ascii"): _RenderSymbols(
        ">", ".", "|", "T", "F", equiv="==", neg_prefix="~"),
    (Notation.MODERN, "unicode"): _RenderSymbols(
        "→", "∧", "∨", "⊤", "⊥",
        equiv="↔", neg_prefix="¬"),
    (Notation.MODERN, "ascii"): _RenderSymbols(
        "->", "&", "|", "T", "F", equiv="<->", neg_prefix="!"),
}

_BINARY_SYMBOL_FIELD = {
    "implication": "impl",
    "conjunction": "and_",
    "disjunction": "or_",
    "equivalence": "equiv",
}


def _wrap(node: Formula, text: str) -> str:
    return f"({text})" if isinstance(node, Binary) else text


def _render_node(node: Formula, syms: _RenderSymbols) -> str:
    if isinstance(node, Variable):
        return node.name
    if isinstance(node, Constant):
        return syms.const_t if node.value is TruthValue.T else syms.const_f
    if isinstance(node, Negation):
        operand = node.operand
        rendered = _render_node(operand, syms)
        if syms.macron and (
            isinstance(operand, Constant)
            or (isinstance(operand, Variable) and len(operand.name) == 1)
        ):
            return rendered + MACRON
        if syms.neg_postfix is not None:
            return _wrap(operand, rendered) + syms.neg_postfix
        return syms.neg_prefix + _wrap(operand, rendered)
    assert isinstance(node, Binary)
    op = getattr(syms, _BINARY_SYMBOL_FIELD[node.connective.name])
    left = _wrap(node.left, _render_node(node.left, syms))
    right = _wrap(node.right, _render_node(node.right, syms))
    return f"{left} {op} {right}"


def render(formula: Formula, config: SyntaxConfig = SyntaxConfig()) -> str:
    """Render a formula in the configured notation and encoding.

    The output reparses under the same config to the same tree, after the
    one-time expansion of connectives the notation has no symbol for.
    """
    lowered = expand_for(formula, config.notation)
    return _render_node(lowered, _RENDER[(config.notation, config.encoding)])


def translate(text: str, source: SyntaxConfig, target: SyntaxConfig) -> str:
    """parse under `source`, render under `target`."""
    return render(parse(text, source), target)


def value_symbols(notation: Notation) -> tuple[str, str]:
    """Symbols used for the two truth values in tables: the peirce notation
    writes v/f (as the 1883-84 and 1902 lists do), the others t/f."""
    if notation is Notation.PEIRCE:
        return ("v", "f")
    return ("t", "f")


def display_width(text: str) -> int:
    """Terminal cells `text` occupies: combining marks take none."""
    return sum(1 for ch in text if not unicodedata.combining(ch))


def pad_display(text: str, width: int) -> str:
    """Left-justify by display width (len() overcounts combining marks)."""
    return text + " " * max(0, width - display_width(text))

from .analysis import UnsafeVariable, check_safety, find_cycles
from .language import (
    Atom,
    BeliefProgram,
    Constant,
    Fact,
    Integer,
    Rule,
    Signature,
    SourceSpan,
    Statement,
    Term,
    Variable,
    default_signature,
    pretty_print,
)
from .parser import ArityError, BeliefLanguageError, ParseError, SortError, parse

__all__ = [
    "ArityError",
    "Atom",
    "BeliefLanguageError",
    "BeliefProgram",
    "Constant",
    "Fact",
    "Integer",
    "ParseError",
    "Rule",
    "Signature",
    "SortError",
    "SourceSpan",
    "Statement",
    "Term",
    "UnsafeVariable",
    "Variable",
    "check_safety",
    "default_signature",
    "find_cycles",
    "parse",
    "pretty_print",
]

"""Recursive-descent parser for the belief language.

Grammar (also published in the docs as EBNF):

    program    = { statement } ;
    statement  = ( fact | rule ) "." ;
    fact       = atom ;
    rule       = atom ":-" atom { "," atom } ;
    atom       = predicate [ "(" term { "," term } ")" ] ;
    term       = integer | constant | variable ;

``%`` starts a comment that runs to end of line. Constants begin with a
lowercase letter, variables with an uppercase one; integers may be
negative. Built-in predicates are checked for arity and argument sorts,
unknown predicates get their arity inferred from first use.
"""
from __future__ import annotations

from dataclasses import dataclass

from .language import (
    Atom,
    BeliefProgram,
    Constant,
    Fact,
    Integer,
    INTEGER,
    Rule,
    Signature,
    SourceSpan,
    Term,
    Variable,
    default_signature,
)


class BeliefLanguageError(Exception):
    """Any diagnostic with a source position."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class ParseError(BeliefLanguageError):
    pass


class ArityError(BeliefLanguageError):
    pass


class SortError(BeliefLanguageError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int
    offset: int


_PUNCT = {"(": "LPAREN", ")": "RPAREN", ",": "COMMA", ".": "PERIOD"}


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, column = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            column = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            column += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch in _PUNCT:
            tokens.append(Token(_PUNCT[ch], ch, line, column, i))
            i += 1
            column += 1
            continue
        if ch == ":":
            if i + 1 < n and text[i + 1] == "-":
                tokens.append(Token("IMPLIES", ":-", line, column, i))
                i += 2
                column += 2
                continue
            raise ParseError(line, column, "expected ':-'")
        if ch.isdigit() or (ch == "-" and i + 1 < n and text[i + 1].isdigit()):
            start = i
            start_col = column
            i += 1
            column += 1
            while i < n and text[i].isdigit():
                i += 1
                column += 1
            tokens.append(Token("INTEGER", text[start:i], line, start_col, start))
            continue
        if ch.isalpha():
            start = i
            start_col = column
            while i < n and (text[i].isalnum() or text[i] == "_"):
                i += 1
                column += 1
            word = text[start:i]
            kind = "VARIABLE" if word[0].isupper() else "IDENT"
            tokens.append(Token(kind, word, line, start_col, start))
            continue
        raise ParseError(line, column, f"unexpected character {ch!r}")
    tokens.append(Token("EOF", "", line, column, n))
    return tokens


class _Parser:
    def __init__(self, text: str, signature: Signature):
        self.text = text
        self.signature = signature
        self.tokens = tokenize(text)
        self.pos = 0
        # arity of unknown predicates, frozen at first use
        self.inferred: dict[str, int] = {}

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            shown = tok.text if tok.kind != "EOF" else "end of input"
            raise ParseError(tok.line, tok.column, f"expected {what}, found {shown!r}")
        return self.advance()

    def parse_program(self) -> BeliefProgram:
        statements: list = []
        spans: list[SourceSpan] = []
        while self.peek().kind != "EOF":
            start = self.peek()
            stmt, end = self.parse_statement()
            statements.append(stmt)
            spans.append(
                SourceSpan(
                    line=start.line,
                    column=start.column,
                    end_line=end.line,
                    end_column=end.column + len(end.text),
                    text=self.text[start.offset : end.offset + len(end.text)],
                )
            )
        return BeliefProgram(statements=tuple(statements), source_spans=tuple(spans))

    def parse_statement(self):
        head, head_token = self.parse_atom()
        if self.peek().kind == "IMPLIES":
            self.advance()
            body: list[Atom] = []
            atom, _ = self.parse_atom()
            body.append(atom)
            while self.peek().kind == "COMMA":
                self.advance()
                atom, _ = self.parse_atom()
                body.append(atom)
            end = self.expect("PERIOD", "'.'")
            return Rule(head=head, body=tuple(body)), end
        end = self.expect("PERIOD", "'.'")
        if not head.is_ground():
            name = sorted(head.variables())[0]
            raise ParseError(
                head_token.line, head_token.column, f"facts must be ground; variable {name} in {head.render()}"
            )
        return Fact(head=head), end

    def parse_atom(self) -> tuple[Atom, Token]:
        name = self.expect("IDENT", "a predicate name")
        args: list[Term] = []
        arg_tokens: list[Token] = []
        if self.peek().kind == "LPAREN":
            self.advance()
            term, tok = self.parse_term()
            args.append(term)
            arg_tokens.append(tok)
            while True:
                nxt = self.peek()
                if nxt.kind == "COMMA":
                    self.advance()
                    term, tok = self.parse_term()
                    args.append(term)
                    arg_tokens.append(tok)
                elif nxt.kind == "RPAREN":
                    self.advance()
                    break
                else:
                    shown = nxt.text if nxt.kind != "EOF" else "end of input"
                    raise ParseError(nxt.line, nxt.column, f"expected ',' or ')', found {shown!r}")
        atom = Atom(predicate=name.text, args=tuple(args))
        self.check_atom(atom, name, arg_tokens)
        return atom, name

    def parse_term(self) -> tuple[Term, Token]:
        tok = self.peek()
        if tok.kind == "INTEGER":
            self.advance()
            return Integer(int(tok.text)), tok
        if tok.kind == "VARIABLE":
            self.advance()
            return Variable(tok.text), tok
        if tok.kind == "IDENT":
            self.advance()
            return Constant(tok.text), tok
        shown = tok.text if tok.kind != "EOF" else "end of input"
        raise ParseError(tok.line, tok.column, f"expected a term, found {shown!r}")

    def check_atom(self, atom: Atom, name_token: Token, arg_tokens: list[Token]) -> None:
        sig = self.signature
        if sig.is_builtin(atom.predicate):
            sorts = sig.predicates[atom.predicate]
            if len(atom.args) != len(sorts):
                raise ArityError(
                    name_token.line,
                    name_token.column,
                    f"{atom.predicate} takes {len(sorts)} argument(s), got {len(atom.args)}",
                )
            for term, sort, tok in zip(atom.args, sorts, arg_tokens):
                if isinstance(term, Variable):
                    continue
                if sort == INTEGER:
                    if not isinstance(term, Integer):
                        raise SortError(
                            tok.line, tok.column,
                            f"argument {term.render()} of {atom.predicate} must be an integer",
                        )
                    continue
                if isinstance(term, Integer):
                    raise SortError(
                        tok.line, tok.column,
                        f"argument {term.render()} of {atom.predicate} must be a {sort} name",
                    )
                if not sig.constant_allowed(sort, term.name):
                    raise SortError(
                        tok.line, tok.column,
                        f"{term.name!r} is not a known {sort}",
                    )
        else:
            arity = self.inferred.setdefault(atom.predicate, len(atom.args))
            if arity != len(atom.args):
                raise ArityError(
                    name_token.line,
                    name_token.column,
                    f"{atom.predicate} was first used with arity {arity}, got {len(atom.args)}",
                )


def parse(text: str, signature: Signature | None = None) -> BeliefProgram:
    """Parse belief-language source; raises ParseError/ArityError/SortError."""
    return _Parser(text, signature or default_signature()).parse_program()

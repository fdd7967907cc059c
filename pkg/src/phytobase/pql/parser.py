"""Recursive-descent parser for PQL.

Grammar (keywords case-insensitive):

    query      = "SELECT" projection "FROM" "plants"
                 [ "WHERE" expr ] [ "ORDER" "BY" field [ "ASC" | "DESC" ] ]
                 [ "LIMIT" integer ] ;
    projection = "*" | field { "," field } ;
    expr       = and { "OR" and } ;
    and        = unary { "AND" unary } ;
    unary      = [ "NOT" ] primary ;
    primary    = "(" expr ")" | comparison ;
    comparison = field ( "=" | "!=" ) literal
               | field "CONTAINS" string
               | field "IN" "(" literal { "," literal } ")" ;
    literal    = string | integer ;

Operator precedence is NOT > AND > OR; parentheses group.
"""

from __future__ import annotations

from ..errors import ParseError, UnknownFieldError
from .ast import And, Compare, Contains, In, Not, Or, PredicateExpr, Query, QUERYABLE_FIELDS
from .lexer import Token, TokenKind, tokenize


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.pos = 0

    # -- token plumbing --

    def _peek(self) -> Token | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _end_span(self) -> tuple[int, int]:
        return (len(self.text), len(self.text))

    def _advance(self) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError("unexpected end of query", span=self._end_span())
        self.pos += 1
        return token

    def _at_keyword(self, word: str) -> bool:
        token = self._peek()
        return token is not None and token.kind is TokenKind.KEYWORD and token.value == word

    def _at_symbol(self, symbol: str) -> bool:
        token = self._peek()
        return token is not None and token.kind is TokenKind.SYMBOL and token.value == symbol

    def _expect_keyword(self, word: str) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError(f"expected {word}", span=self._end_span())
        if token.kind is not TokenKind.KEYWORD or token.value != word:
            raise ParseError(f"expected {word}, found {token.text!r}", span=token.span)
        return self._advance()

    def _expect_symbol(self, symbol: str) -> Token:
        token = self._peek()
        if token is None:
            raise ParseError(f"expected {symbol!r}", span=self._end_span())
        if token.kind is not TokenKind.SYMBOL or token.value != symbol:
            raise ParseError(f"expected {symbol!r}, found {token.text!r}", span=token.span)
        return self._advance()

    # -- grammar --

    def parse(self) -> Query:
        self._expect_keyword("SELECT")
        projection = self._projection()
        self._expect_keyword("FROM")
        table = self._peek()
        if (
            table is None
            or table.kind is not TokenKind.IDENTIFIER
            or table.value.casefold() != "plants"
        ):
            raise ParseError(
                "expected table 'plants'",
                span=table.span if table else self._end_span(),
            )
        self._advance()

        predicate = None
        if self._at_keyword("WHERE"):
            self._advance()
            predicate = self._expr()

        order_by = None
        if self._at_keyword("ORDER"):
            self._advance()
            self._expect_keyword("BY")
            field = self._field()
            direction = "ASC"
            if self._at_keyword("ASC") or self._at_keyword("DESC"):
                direction = self._advance().value
            order_by = (field, direction)

        limit = None
        if self._at_keyword("LIMIT"):
            self._advance()
            token = self._peek()
            if token is None or token.kind is not TokenKind.INTEGER:
                raise ParseError(
                    "expected a positive integer after LIMIT",
                    span=token.span if token else self._end_span(),
                )
            if token.value < 1:
                raise ParseError("LIMIT must be positive", span=token.span)
            self._advance()
            limit = token.value

        trailing = self._peek()
        if trailing is not None:
            raise ParseError(f"unexpected {trailing.text!r}", span=trailing.span)
        return Query(projection=projection, predicate=predicate, order_by=order_by, limit=limit)

    def _projection(self) -> tuple[str, ...] | str:
        if self._at_symbol("*"):
            self._advance()
            return "*"
        fields = [self._field()]
        while self._at_symbol(","):
            self._advance()
            fields.append(self._field())
        return tuple(fields)

    def _field(self) -> str:
        token = self._peek()
        if token is None or token.kind is not TokenKind.IDENTIFIER:
            raise ParseError(
                "expected a field name",
                span=token.span if token else self._end_span(),
            )
        name = token.value.casefold()
        if name not in QUERYABLE_FIELDS:
            raise UnknownFieldError(f"unknown field {token.value!r}", span=token.span)
        self._advance()
        return name

    def _expr(self) -> PredicateExpr:
        children = [self._and()]
        while self._at_keyword("OR"):
            self._advance()
            children.append(self._and())
        return children[0] if len(children) == 1 else Or(tuple(children))

    def _and(self) -> PredicateExpr:
        children = [self._unary()]
        while self._at_keyword("AND"):
            self._advance()
            children.append(self._unary())
        return children[0] if len(children) == 1 else And(tuple(children))

    def _unary(self) -> PredicateExpr:
        if self._at_keyword("NOT"):
            self._advance()
            return Not(self._primary())
        return self._primary()

    def _primary(self) -> PredicateExpr:
        if self._at_symbol("("):
            self._advance()
            inner = self._expr()
            self._expect_symbol(")")
            return inner
        return self._comparison()

    def _comparison(self) -> PredicateExpr:
        field = self._field()
        token = self._peek()
        if token is None:
            raise ParseError(
                "expected =, !=, CONTAINS, or IN", span=self._end_span()
            )

        if token.kind is TokenKind.SYMBOL and token.value in ("=", "!="):
            self._advance()
            return Compare(field, token.value, self._literal())

        if token.kind is TokenKind.KEYWORD and token.value == "CONTAINS":
            self._advance()
            operand = self._peek()
            if operand is None or operand.kind is not TokenKind.STRING:
                raise ParseError(
                    "CONTAINS needs a quoted string",
                    span=operand.span if operand else self._end_span(),
                )
            self._advance()
            return Contains(field, operand.value)

        if token.kind is TokenKind.KEYWORD and token.value == "IN":
            self._advance()
            self._expect_symbol("(")
            literals = [self._literal()]
            while self._at_symbol(","):
                self._advance()
                literals.append(self._literal())
            self._expect_symbol(")")
            return In(field, tuple(literals))

        raise ParseError(
            f"expected =, !=, CONTAINS, or IN, found {token.text!r}", span=token.span
        )

    def _literal(self):
        token = self._peek()
        if token is None or token.kind not in (TokenKind.STRING, TokenKind.INTEGER):
            raise ParseError(
                "expected a string or integer literal",
                span=token.span if token else self._end_span(),
            )
        self._advance()
        return token.value


def parse_query(text: str) -> Query:
    """Parse PQL text into a Query AST."""
    return _Parser(text).parse()

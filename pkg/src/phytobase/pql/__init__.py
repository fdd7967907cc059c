"""PQL, the plant query language.

A small SELECT dialect over the single implicit ``plants`` table:
lexer, recursive-descent parser, canonical printer, and an evaluator
that uses the store's inverted indexes where it can and falls back to
a full scan everywhere else (with identical results).
"""

from .ast import (
    And,
    Compare,
    Contains,
    In,
    Not,
    Or,
    PredicateExpr,
    Query,
    QUERYABLE_FIELDS,
    ResultRow,
    ResultSet,
)
from .lexer import Token, TokenKind, tokenize
from .parser import parse_query
from .printer import render_query
from .evaluator import evaluate_query, structured_search

__all__ = [
    "And",
    "Compare",
    "Contains",
    "In",
    "Not",
    "Or",
    "PredicateExpr",
    "Query",
    "QUERYABLE_FIELDS",
    "ResultRow",
    "ResultSet",
    "Token",
    "TokenKind",
    "tokenize",
    "parse_query",
    "render_query",
    "evaluate_query",
    "structured_search",
]

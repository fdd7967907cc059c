"""Canonical PQL printer.

Produces uppercase keywords, single spaces, and only the parentheses
that precedence demands, such that parse_query(render_query(q)) == q
for any well-formed AST. Nested same-operator nodes are parenthesized
so the printed tree re-parses with identical shape.
"""

from __future__ import annotations

from .ast import And, Compare, Contains, In, Not, Or, PredicateExpr, Query

_PREC_OR = 1
_PREC_AND = 2
_PREC_NOT = 3
_PREC_ATOM = 4


def _literal(value) -> str:
    if isinstance(value, int):
        return str(value)
    escaped = value.replace("\\", "\\\\").replace("'", "\\'")
    return f"'{escaped}'"


def _expr(node: PredicateExpr, min_prec: int) -> str:
    if isinstance(node, Compare):
        text, prec = f"{node.field} {node.op} {_literal(node.literal)}", _PREC_ATOM
    elif isinstance(node, Contains):
        text, prec = f"{node.field} CONTAINS {_literal(node.literal)}", _PREC_ATOM
    elif isinstance(node, In):
        items = ", ".join(_literal(v) for v in node.literals)
        text, prec = f"{node.field} IN ({items})", _PREC_ATOM
    elif isinstance(node, Not):
        text, prec = f"NOT {_expr(node.child, _PREC_ATOM)}", _PREC_NOT
    elif isinstance(node, And):
        text = " AND ".join(_expr(c, _PREC_AND + 1) for c in node.children)
        prec = _PREC_AND
    elif isinstance(node, Or):
        text = " OR ".join(_expr(c, _PREC_OR + 1) for c in node.children)
        prec = _PREC_OR
    else:
        raise TypeError(f"not a predicate node: {node!r}")
    return f"({text})" if prec < min_prec else text


def render_query(query: Query) -> str:
    """Canonical text for a Query; inverse of parse_query."""
    if query.projection == "*":
        projection = "*"
    else:
        projection = ", ".join(query.projection)
    parts = [f"SELECT {projection} FROM plants"]
    if query.predicate is not None:
        parts.append(f"WHERE {_expr(query.predicate, 0)}")
    if query.order_by is not None:
        field, direction = query.order_by
        parts.append(f"ORDER BY {field} {direction}")
    if query.limit is not None:
        parts.append(f"LIMIT {query.limit}")
    return " ".join(parts)

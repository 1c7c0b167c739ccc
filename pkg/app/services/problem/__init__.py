from app.services.problem.context import ProblemContext, build_context, parse_element
from app.services.problem.expression import parse_expression
from app.services.problem.parser import parse_matrix, parse_problem, read_problem

__all__ = [
    "ProblemContext",
    "build_context",
    "parse_element",
    "parse_expression",
    "parse_matrix",
    "parse_problem",
    "read_problem",
]

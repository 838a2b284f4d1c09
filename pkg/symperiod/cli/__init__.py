"""
Symperiod CLI -- argparse front-end, space expressions and output renderers.
"""

from .expressions import SpaceExpression, parse_expression
from .main import build_parser, main

__all__ = ["SpaceExpression", "parse_expression", "build_parser", "main"]

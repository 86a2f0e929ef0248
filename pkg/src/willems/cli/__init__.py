"""Command-line interface and text formats."""
from .main import COMMANDS, build_parser, main, run_command
from .parse import (parse_ast, parse_element, parse_generators, parse_point, parse_poly,
                    parse_signal)
from .problem import ProblemSpec, bounds_from, load_hints, parse_problem

__all__ = [
    "COMMANDS", "ProblemSpec", "bounds_from", "build_parser", "load_hints", "main",
    "parse_ast", "parse_element", "parse_generators", "parse_point", "parse_poly",
    "parse_problem", "parse_signal", "run_command",
]

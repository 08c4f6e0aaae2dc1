"""The markoff command line."""

from markoff.cli.main import build_parser, main
from markoff.cli.result import CommandResult

__all__ = ["CommandResult", "build_parser", "main"]

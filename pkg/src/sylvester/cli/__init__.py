"""Command-line interface: ``sylvester <subcommand> --ring ... [--json]``."""
from .main import Command, build_parser, execute, main, parse_command, run

__all__ = ["Command", "build_parser", "execute", "main", "parse_command", "run"]

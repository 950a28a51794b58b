"""Command-line front end."""
from .runner import COMMANDS, Outcome, Session, build_parser, main, render

__all__ = ["COMMANDS", "Outcome", "Session", "build_parser", "main", "render"]

"""Main entry point for braided-groups: `python main.py <command> ...`."""
import sys

from src.cli.runner import main

if __name__ == "__main__":
    sys.exit(main())

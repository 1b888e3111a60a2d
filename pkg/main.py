"""
Vandermonde b-functions - Main Entry Point

Exact b-functions of Vandermonde determinants and Coxeter arrangements.
"""

import sys

from src.cli import run


def main() -> None:
    """Run one command from the command line and exit with its status."""
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()

"""Entry point for ``python -m chromatic_bracket``."""

from .cli import console_main

console_main()

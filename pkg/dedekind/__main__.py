"""Allow ``python -m dedekind``."""

from dedekind.cli import run

run()

"""Entry point for ``python -m artifact``."""

import sys

from .cli import main

if __name__ == "__main__":
    sys.exit(main())

"""Run the CLI as ``python -m triodot``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

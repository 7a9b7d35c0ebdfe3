"""Allow ``python -m bekernels``."""

from .cli import run

if __name__ == "__main__":
    run()

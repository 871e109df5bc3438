"""
Entry point for running ksetlab as a module with python -m ksetlab
"""

from .cli import cli

if __name__ == "__main__":
    cli()

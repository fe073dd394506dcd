import sys

from cli.application import run

if __name__ == "__main__":
    sys.exit(run())

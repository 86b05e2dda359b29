#!/usr/bin/env python3

from logging import basicConfig, INFO
from sys import exit, stderr

from mostarcheck.cli import run

if __name__ == "__main__":
    basicConfig(level=INFO, stream=stderr)
    exit(run())

# -*- coding: utf-8 -*-
"""
Entry point for the neutrosophic tropical algebra command line.

Usage:
    python main.py add --mode min data/matrices/P.nnm data/matrices/Q.nnm
    python main.py mul --reduce plus data/matrices/A.nnm data/matrices/B.nnm
    python main.py axioms --mode min --samples 10000 --seed 7

Run `python main.py --help` for every subcommand.
"""

import logging
import sys

from config import LOG_FORMAT
from src.cli import cli_main


if __name__ == "__main__":
    logging.basicConfig(level=logging.INFO, format=LOG_FORMAT, stream=sys.stderr)
    sys.exit(cli_main(sys.argv[1:]))

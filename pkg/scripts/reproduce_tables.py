#!/usr/bin/env python3
"""Run the full 40-row reference reproduction and emit certificates.

Usage: python scripts/reproduce_tables.py [--out DIR] [--bound N] [--jobs N]
"""

import sys

from euclid4.cli import main

if __name__ == "__main__":
    sys.exit(main(["reproduce-tables", *sys.argv[1:]]))

#!/usr/bin/env python3
"""Entry point for NodeAssess."""

import sys

from src.cli import main

if __name__ == '__main__':
    sys.exit(main())

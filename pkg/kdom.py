#!/usr/bin/env python3
"""
Command-line entry point for the k-domination toolkit.

Usage:
    python kdom.py reach --input streets.txt --threshold 500 --output reach.txt
    python kdom.py solve --input reach.txt --k 2 --method greedy
    python kdom.py bench --input reach.txt --k 2 --methods beam --beam-widths 1,2,4
    python kdom.py --help
"""
import sys

from src.cli import main

if __name__ == "__main__":
    sys.exit(main())

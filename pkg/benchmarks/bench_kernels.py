#!/usr/bin/env python3
"""Compare the compiled kernel core against the numpy fallback."""

import argparse

from steerkit.bench import run_benchmarks

if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    run_benchmarks(repeats=parser.parse_args().repeats)

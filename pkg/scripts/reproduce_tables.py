#!/usr/bin/env python3
"""Recompute all five summary tables from first principles and print them."""

import sys

from polyvote.cli import main

TITLES = {
    1: "Joint limiting Condorcet efficiencies of the positional rules",
    2: "Limiting probability that a rule elects the pairwise-majority loser",
    3: "Limiting probability that rules agree",
    4: "Limiting probability of participation paradoxes for scoring runoffs",
    5: "Limiting probability of the referendum paradox",
}


def run() -> int:
    fmt = sys.argv[1] if len(sys.argv) > 1 else "text"
    for number, title in TITLES.items():
        print(f"== table {number}: {title}")
        code = main(["table", "--table", str(number), "--format", fmt])
        if code != 0:
            return code
        print()
    return 0


if __name__ == "__main__":
    sys.exit(run())

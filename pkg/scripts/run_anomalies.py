#!/usr/bin/env python3
"""Run the built-in anomaly corpus and report each scenario.

Equivalent to ``ordpref anomalies``; kept as a script so the corpus can be
run straight from a checkout.
"""

import sys

from ordpref.cli import main

if __name__ == "__main__":
    sys.exit(main(["anomalies"]))

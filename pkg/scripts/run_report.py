#!/usr/bin/env python3
"""Run the estimation pipeline under both constants profiles and print the
flat JSON reports side by side."""

import json
import sys

from aragospot.cli import serialize_report
from aragospot.pipeline import run_paper_pipeline


def main() -> int:
    for profile in ("paper", "codata"):
        report = run_paper_pipeline(profile)
        print(json.dumps(serialize_report(report), indent=2))
        for key, note in report.notes.items():
            print(f"# note [{key}]: {note}")
        print()
    return 0


if __name__ == "__main__":
    sys.exit(main())

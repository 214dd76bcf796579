#!/usr/bin/env python3
"""
pbwforge command line.

  verify       J1, J2 and the dimension comparison for an algebra document
  solve-as     staged solution of a cubic Artin-Schelter family (--family)
  build-wedge  alpha maps on wedge^N V from a wedge document or --family random|heisenberg
  ainf-check   the A-infinity axioms on the Yoneda algebra
  hilbert      graded dims of A next to filtered dims of U
  selftest     a battery over the shipped mocks and tables

Reports are JSON, written atomically to --out or output/reports/.
Exit codes: 0 pass, 1 mathematical failure, 2 input error.
"""
from pathlib import Path
import logging
import sys
import traceback

# Add parent directory to path to import from src
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from src.cli.commands import make_job, run_job
from src.cli.io import write_report
from src.errors import InputError
from src.models import ErrorReport

MARKS = {"pass": "✓", "warning": "⚠", "fail": "✗"}


def print_summary(report) -> None:
    verdict = report.verdict
    print(f"\n{MARKS.get(verdict, '?')} verdict: {verdict}")
    for name in ("J1", "J2", "dims", "comparison", "check"):
        section = getattr(report, name, None)
        if section is not None:
            print(f"   {MARKS.get(section.verdict, '?')} {name}: {section.verdict}")
    if getattr(report, "refusal", None):
        print(f"   ✗ refused: {report.refusal}")
    for item in getattr(report, "items", []):
        print(f"   {MARKS[item.verdict]} {item.name}: {item.detail}")
    if isinstance(report, ErrorReport):
        print(f"   ✗ {report.error_type}: {report.error}")
    for warning in getattr(report, "warnings", []):
        print(f"   ⚠ {warning}")


def main():
    """Parse options, run one job, write its report."""
    import argparse

    parser = argparse.ArgumentParser(description="PBW-deformations of N-Koszul algebras")
    parser.add_argument("command", choices=["verify", "solve-as", "build-wedge", "ainf-check", "hilbert", "selftest"])
    parser.add_argument("input", nargs="?", type=Path, help="Algebra or wedge document (JSON)")
    parser.add_argument("--maxdeg", type=int, help="Highest degree compared (default 6)")
    parser.add_argument("--margin", type=int, help="Extra truncation degrees for the Groebner basis (default N+2)")
    parser.add_argument("--degbound", type=int, help="Yoneda degree bound for ainf-check (default 2N+2)")
    parser.add_argument("--seed", type=int, help="Seed for randomized constructions")
    parser.add_argument("--out", type=Path, help="Report path (default output/reports/<command>-<name>.json)")
    parser.add_argument("--family", help="AS family tag for solve-as, or random|heisenberg for build-wedge")
    parser.add_argument("--field", type=int, help="Override the document's cyclotomic conductor")
    parser.add_argument("--allow-small-v", action="store_true", help="Build wedge deformations with v = N")
    parser.add_argument("--verbose", action="store_true", help="Log progress at INFO level")
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")

    print("=" * 60)
    print(f"pbwforge {args.command}")
    print("=" * 60)

    options = {k: v for k, v in vars(args).items() if k != "verbose" and v is not None}
    try:
        job = make_job(**options)
    except InputError as e:
        print(f"\n✗ invalid options: {e}")
        return 2

    if job.input is not None:
        print(f"\n📂 Input: {job.input}")
    try:
        code, report = run_job(job)
    except Exception as e:
        logging.error(f"{job.command} crashed: {e}")
        traceback.print_exc()
        code, report = 1, ErrorReport(command=job.command, kind="math", error=str(e), error_type=type(e).__name__)

    out = write_report(report, job.out or job.default_out())
    print_summary(report)
    print(f"\n💾 Report: {out}")
    print("=" * 60)
    return code


if __name__ == "__main__":
    sys.exit(main())

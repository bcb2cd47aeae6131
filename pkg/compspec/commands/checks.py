"""verify, sweep and audit subcommands."""

import argparse
import asyncio
import logging
import sys
from typing import Any

from pydantic import BaseModel

from compspec.commands.graphs import emit_json, number
from compspec.config import settings
from compspec.database import session_scope
from compspec.errors import ParameterError
from compspec.services.quotient import rows_to_csv, sweep_lemma_3_3, sweep_lemma_4_2
from compspec.services.report_store import find_report, save_report, verification_request
from compspec.services.verifier import (
    audit_suite,
    verify_lemma_3_2,
    verify_theorem_3_1,
    verify_theorem_3_4,
    verify_theorem_4_3,
)

logger = logging.getLogger(__name__)

THEOREMS = ["3.1", "3.4", "4.3", "lemma3.2"]


def add_check_commands(subparsers: argparse._SubParsersAction) -> None:
    verify = subparsers.add_parser("verify", help="Brute-force a theorem at one (n, kappa)")
    verify.add_argument("--theorem", choices=THEOREMS, required=True)
    verify.add_argument("--n", type=int, required=True)
    verify.add_argument("--kappa", type=int, required=True)
    verify.add_argument(
        "--jobs", type=int, default=None, help="Worker processes (default: SPECTRA_JOBS)"
    )
    verify.add_argument("--shards", type=int, default=None)
    verify.add_argument("--out", help="Also write the report JSON to this file")
    verify.add_argument("--allow-large", action="store_true", help="Permit the n = 8 scan")
    verify.add_argument("--cache", action="store_true", help="Reuse and store reports")
    verify.set_defaults(handler=run_verify)

    sweep = subparsers.add_parser("sweep", help="Quartic monotonicity and threshold checks")
    sweep.add_argument("--lemma", choices=["3.3", "4.2"], required=True)
    sweep.add_argument("--max-n", type=int, required=True)
    sweep.set_defaults(handler=run_sweep)

    audit = subparsers.add_parser("audit", help="Findings table for the audited inequalities")
    audit.add_argument("--max-n", type=int, default=20)
    audit.add_argument("--format", choices=["table", "json", "csv"], default="table")
    audit.set_defaults(handler=run_audit)


def _run_theorem(args: argparse.Namespace, jobs: int) -> BaseModel:
    if args.theorem == "lemma3.2":
        return verify_lemma_3_2(args.n, args.kappa, allow_large=args.allow_large)
    check = {
        "3.1": verify_theorem_3_1,
        "3.4": verify_theorem_3_4,
        "4.3": verify_theorem_4_3,
    }[args.theorem]
    return check(
        args.n, args.kappa, jobs=jobs, shards=args.shards, allow_large=args.allow_large
    )


async def _cached_document(args: argparse.Namespace, jobs: int) -> dict[str, Any]:
    request = verification_request(args.theorem, args.n, args.kappa, allow_large=args.allow_large)
    async with session_scope() as db:
        document = await find_report(db, request)
        if document is not None:
            logger.info("reusing stored report for %s", request)
            return document
        report = _run_theorem(args, jobs)
        await save_report(db, request, report)
        return report.model_dump(mode="json")


def run_verify(args: argparse.Namespace) -> int:
    if args.theorem == "lemma3.2" and (args.jobs is not None or args.shards is not None):
        raise ParameterError("--jobs/--shards do not apply to lemma3.2")
    jobs = args.jobs if args.jobs is not None else settings.jobs
    if jobs < 1:
        raise ValueError("--jobs must be at least 1")
    if args.cache:
        document = asyncio.run(_cached_document(args, jobs))
    else:
        document = _run_theorem(args, jobs).model_dump(mode="json")
    emit_json(document)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            emit_json(document, handle)
    return 1 if document["verdict"] == "refuted" else 0


def run_sweep(args: argparse.Namespace) -> int:
    rows = sweep_lemma_3_3(args.max_n) if args.lemma == "3.3" else sweep_lemma_4_2(args.max_n)
    sys.stdout.write(rows_to_csv(rows))
    return 0


def run_audit(args: argparse.Namespace) -> int:
    records = audit_suite(args.max_n)
    if args.format == "json":
        emit_json([r.model_dump() for r in records])
    elif args.format == "csv":
        sys.stdout.write(rows_to_csv(records))
    else:
        width = max((len(r.instance) for r in records), default=8)
        sys.stdout.write(f"{'claim':<22} {'instance':<{width}} {'left':>16} {'right':>16}  holds\n")
        for r in records:
            sys.stdout.write(
                f"{r.claim:<22} {r.instance:<{width}} {number(r.left):>16} "
                f"{number(r.right):>16}  {'yes' if r.holds else 'NO'}\n"
            )
    return 0

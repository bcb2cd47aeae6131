"""
Report store: cached verification reports keyed by their request.

Identical requests map to the same id (SHA-256 of the canonical request
JSON), so storing twice is a no-op and lookups need no scan.
"""

import hashlib
import json
import logging
from typing import Any

from pydantic import BaseModel
from sqlalchemy import select
from sqlalchemy.ext.asyncio import AsyncSession

from compspec.models import StoredReport

logger = logging.getLogger(__name__)


def _canonical_request(request: dict[str, Any]) -> str:
    return json.dumps(request, sort_keys=True, separators=(",", ":"))


def _compute_request_hash(request: dict[str, Any]) -> str:
    """Deterministic id of a verification request (sorted keys, no whitespace)."""
    return hashlib.sha256(_canonical_request(request).encode()).hexdigest()


def verification_request(
    theorem: str, n: int, kappa: int, *, allow_large: bool = False
) -> dict[str, Any]:
    """Request key; ``--jobs`` is left out because it never changes a result."""
    return {"theorem": theorem, "n": n, "kappa": kappa, "allow_large": allow_large}


async def save_report(
    db: AsyncSession, request: dict[str, Any], report: BaseModel
) -> tuple[str, bool]:
    """
    Store a report unless one exists for the same request.

    Returns:
        Tuple of (report_id, was_cached)
    """
    report_id = _compute_request_hash(request)
    existing = await get_report(db, report_id)
    if existing is not None:
        return existing.id, True

    stored = StoredReport(
        id=report_id,
        theorem=str(request["theorem"]),
        n=int(request["n"]),
        kappa=int(request["kappa"]),
        verdict=str(getattr(report, "verdict", "")),
        request_json=_canonical_request(request),
        document=report.model_dump_json(),
    )
    db.add(stored)
    await db.flush()
    logger.debug("stored report %s for %s", report_id[:12], stored.request_json)
    return stored.id, False


async def get_report(db: AsyncSession, report_id: str) -> StoredReport | None:
    stmt = select(StoredReport).where(StoredReport.id == report_id)
    result = await db.execute(stmt)
    return result.scalar_one_or_none()


async def find_report(db: AsyncSession, request: dict[str, Any]) -> dict[str, Any] | None:
    """Stored report document for ``request`` as a dict, or None."""
    stored = await get_report(db, _compute_request_hash(request))
    if stored is None:
        return None
    return json.loads(stored.document)

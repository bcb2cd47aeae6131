"""Unit tests for the cached report store."""

import pytest

from compspec.database import session_scope
from compspec.services.report_store import (
    _canonical_request,
    _compute_request_hash,
    find_report,
    get_report,
    save_report,
    verification_request,
)
from compspec.services.verifier import verify_theorem_4_3


@pytest.fixture(scope="module")
def report_4_3():
    return verify_theorem_4_3(5, 1)


class TestRequestHash:
    """Tests for request canonicalization."""

    def test_canonical_request_sorted_and_compact(self):
        text = _canonical_request({"n": 5, "kappa": 1, "theorem": "4.3"})
        assert text == '{"kappa":1,"n":5,"theorem":"4.3"}'

    def test_hash_ignores_key_order(self):
        first = _compute_request_hash({"theorem": "3.4", "n": 6, "kappa": 2})
        second = _compute_request_hash({"kappa": 2, "n": 6, "theorem": "3.4"})
        assert first == second
        assert len(first) == 64
        assert all(c in "0123456789abcdef" for c in first)

    def test_allow_large_is_part_of_the_key(self):
        small = verification_request("3.4", 6, 2)
        large = verification_request("3.4", 6, 2, allow_large=True)
        assert _compute_request_hash(small) != _compute_request_hash(large)


class TestReportStore:
    """Tests for storing and reusing reports."""

    async def test_save_and_find(self, db_session, report_4_3):
        request = verification_request("4.3", 5, 1)
        report_id, cached = await save_report(db_session, request, report_4_3)

        assert cached is False
        assert report_id == _compute_request_hash(request)

        stored = await get_report(db_session, report_id)
        assert stored.theorem == "4.3"
        assert stored.verdict == report_4_3.verdict

        document = await find_report(db_session, request)
        assert document == report_4_3.model_dump(mode="json")

    async def test_save_twice_is_cached(self, db_session, report_4_3):
        request = verification_request("4.3", 5, 1)
        first_id, _ = await save_report(db_session, request, report_4_3)
        second_id, cached = await save_report(db_session, request, report_4_3)

        assert cached is True
        assert first_id == second_id

    async def test_find_missing(self, db_session):
        assert await find_report(db_session, verification_request("3.1", 5, 1)) is None

    async def test_session_scope_commits(self, tmp_path, report_4_3):
        url = f"sqlite+aiosqlite:///{tmp_path / 'scope.db'}"
        request = verification_request("4.3", 5, 1)
        async with session_scope(url) as db:
            await save_report(db, request, report_4_3)

        async with session_scope(url) as db:
            document = await find_report(db, request)
        assert document is not None
        assert document["verdict"] == report_4_3.verdict

"""SQLAlchemy ORM models for the report store."""

from datetime import datetime

from sqlalchemy import DateTime, Index, Integer, String, Text, func
from sqlalchemy.orm import DeclarativeBase, Mapped, mapped_column


class Base(DeclarativeBase):
    """Base class for all ORM models."""

    pass


class StoredReport(Base):
    """
    A finished verification report.

    The id is the SHA-256 of the canonical request JSON, so re-running the
    same request finds the stored document instead of scanning again.
    """

    __tablename__ = "reports"

    id: Mapped[str] = mapped_column(String(64), primary_key=True)
    theorem: Mapped[str] = mapped_column(String(16), nullable=False)
    n: Mapped[int] = mapped_column(Integer, nullable=False)
    kappa: Mapped[int] = mapped_column(Integer, nullable=False)
    verdict: Mapped[str] = mapped_column(String(32), nullable=False)
    # Canonical request and the full report, both JSON
    request_json: Mapped[str] = mapped_column(Text, nullable=False)
    document: Mapped[str] = mapped_column(Text, nullable=False)
    created_at: Mapped[datetime] = mapped_column(
        DateTime(timezone=True), server_default=func.now(), nullable=False
    )

    __table_args__ = (Index("ix_reports_theorem_n_kappa", "theorem", "n", "kappa"),)

    def __repr__(self) -> str:
        return f"<StoredReport(theorem={self.theorem}, n={self.n}, kappa={self.kappa}, verdict={self.verdict})>"

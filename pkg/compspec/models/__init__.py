from compspec.models.report import Base, StoredReport

__all__ = ["Base", "StoredReport"]

"""Alembic environment for the compspec report store."""

import asyncio
from logging.config import fileConfig

from alembic import context
from sqlalchemy.engine import Connection

from compspec.config import settings
from compspec.database import make_engine
from compspec.models import Base

config = context.config
target_metadata = Base.metadata

# The ini placeholder defers to SPECTRA_DATABASE_URL; an explicit URL wins
if config.get_main_option("sqlalchemy.url", "").startswith("driver://"):
    config.set_main_option("sqlalchemy.url", settings.database_url)

# Callers that own logging (the test suite) pass configure_logger=False
if config.config_file_name is not None and config.attributes.get("configure_logger", True):
    fileConfig(config.config_file_name, disable_existing_loggers=False)


def _configure(**kwargs) -> None:
    # SQLite cannot ALTER most constraints in place
    context.configure(target_metadata=target_metadata, render_as_batch=True, **kwargs)
    with context.begin_transaction():
        context.run_migrations()


def run_migrations_offline() -> None:
    """Emit the migration SQL for the configured URL without connecting."""
    _configure(
        url=config.get_main_option("sqlalchemy.url"),
        literal_binds=True,
        dialect_opts={"paramstyle": "named"},
    )


def _run_on(connection: Connection) -> None:
    _configure(connection=connection)


async def run_async_migrations() -> None:
    engine = make_engine(config.get_main_option("sqlalchemy.url"))
    try:
        async with engine.connect() as connection:
            await connection.run_sync(_run_on)
    finally:
        await engine.dispose()


if context.is_offline_mode():
    run_migrations_offline()
else:
    asyncio.run(run_async_migrations())

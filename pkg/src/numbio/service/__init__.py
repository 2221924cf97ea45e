"""FastAPI service wrapping the core package. Run with ``uvicorn numbio.service:app``."""

from .app import app

__all__ = ["app"]

"""HTTP face of zetalab: pydantic request models, handlers producing the
canonical payloads, and the FastAPI app factory. The CLI is a thin client
of the same handlers, so both surfaces emit identical payloads."""

from zetalab.service.app import create_app

__all__ = ["create_app"]

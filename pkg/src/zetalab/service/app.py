"""FastAPI application exposing every operation as a POST endpoint under
/v1; payloads are exactly the CLI's JSON payloads. Domain errors map to
422, size/cap errors to 413, internal consistency failures to 500."""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from zetalab import __version__
from zetalab.errors import ConsistencyError, DomainError, SizeError
from zetalab.service import handlers, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="zetalab",
        version=__version__,
        description="Zeta functions at desk scale: curves, number fields, "
        "the finite-level multiplicative system, L-series, flat tori.",
    )

    @app.exception_handler(DomainError)
    async def domain_error(_: Request, exc: DomainError):
        return JSONResponse(status_code=422, content={"status": "error", "kind": "domain", "detail": str(exc)})

    @app.exception_handler(SizeError)
    async def size_error(_: Request, exc: SizeError):
        return JSONResponse(status_code=413, content={"status": "error", "kind": "size", "detail": str(exc)})

    @app.exception_handler(ConsistencyError)
    async def consistency_error(_: Request, exc: ConsistencyError):
        return JSONResponse(status_code=500, content={"status": "error", "kind": "internal", "detail": str(exc)})

    @app.get("/v1/health")
    def health():
        return {"status": "ok", "version": __version__}

    @app.post("/v1/curve-count")
    def curve_count(req: schemas.CurveCountRequest):
        return handlers.handle_curve_count(req)

    @app.post("/v1/curve-zeta")
    def curve_zeta(req: schemas.CurveZetaRequest):
        return handlers.handle_curve_zeta(req)

    @app.post("/v1/split-compare")
    def split_compare(req: schemas.SplitCompareRequest):
        return handlers.handle_split_compare(req)

    @app.post("/v1/dedekind")
    def dedekind(req: schemas.DedekindRequest):
        return handlers.handle_dedekind(req)

    @app.post("/v1/gassmann")
    def gassmann(req: schemas.GassmannRequest):
        return handlers.handle_gassmann(req)

    @app.get("/v1/gassmann/demo")
    def gassmann_demo():
        return handlers.gassmann_demo_payload()

    @app.post("/v1/bc-act")
    def bc_act(req: schemas.BcActRequest):
        return handlers.handle_bc_act(req)

    @app.post("/v1/bc-state")
    def bc_state(req: schemas.BcStateRequest):
        return handlers.handle_bc_state(req)

    @app.post("/v1/bc-check-iso")
    def bc_check_iso(req: schemas.BcCheckIsoRequest):
        return handlers.handle_bc_check_iso(req)

    @app.post("/v1/lseries")
    def lseries(req: schemas.LSeriesRequest):
        return handlers.handle_lseries(req)

    @app.post("/v1/l-fingerprint")
    def l_fingerprint(req: schemas.LFingerprintRequest):
        return handlers.handle_l_fingerprint(req)

    @app.post("/v1/epstein")
    def epstein(req: schemas.EpsteinRequest):
        return handlers.handle_epstein(req)

    @app.post("/v1/eisenstein")
    def eisenstein(req: schemas.EisensteinRequest):
        return handlers.handle_eisenstein(req)

    @app.post("/v1/dilog")
    def dilog(req: schemas.DilogRequest):
        return handlers.handle_dilog(req)

    @app.post("/v1/torus-zeta")
    def torus_zeta(req: schemas.TorusZetaRequest):
        return handlers.handle_torus_zeta(req)

    @app.post("/v1/torus-distance")
    def torus_distance(req: schemas.TorusDistanceRequest):
        return handlers.handle_torus_distance(req)

    @app.get("/v1/paper-check")
    def paper_check():
        return handlers.handle_paper_check()

    return app

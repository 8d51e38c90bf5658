"""FastAPI application exposing the engine.

Run with ``uvicorn ribbonpoly.service.app:app``.  Keeping the process alive
keeps the canonical-form caches and polynomial memo tables warm across
requests, which is the point of serving this engine rather than shelling out
per computation.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException

from ..arrows import RibbonError
from . import ops, schemas


def create_app() -> FastAPI:
    app = FastAPI(
        title="ribbonpoly",
        description="Exact twisted duality, medial graphs, and polynomials of embedded graphs.",
        version="0.1.0",
    )

    def guard(fn, *args):
        try:
            return fn(*args)
        except RibbonError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        except KeyError as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc

    @app.get("/health")
    def health() -> dict:
        return {"status": "ok"}

    @app.post("/parse", response_model=schemas.GraphResponse)
    def parse_graph(req: schemas.GraphRequest):
        return guard(ops.parse_graph, req)

    @app.post("/info", response_model=schemas.InfoResponse)
    def info(req: schemas.GraphRequest):
        return guard(ops.info, req)

    @app.post("/apply", response_model=schemas.GraphResponse)
    def apply_assignment(req: schemas.ApplyRequest):
        return guard(ops.apply_assignment, req)

    @app.post("/dual", response_model=schemas.GraphResponse)
    def dual(req: schemas.GraphRequest):
        return guard(ops.dual, req)

    @app.post("/orbit", response_model=schemas.OrbitResponse)
    def orbit_of(req: schemas.OrbitRequest):
        return guard(ops.orbit_of, req)

    @app.post("/medial", response_model=schemas.MedialResponse)
    def medial_of(req: schemas.GraphRequest):
        return guard(ops.medial_of, req)

    @app.post("/checkerboard", response_model=schemas.CheckerboardResponse)
    def checkerboard(req: schemas.GraphRequest):
        return guard(ops.checkerboard, req)

    @app.post("/cfg", response_model=schemas.CycleFamilyResponse)
    def cycle_family(req: schemas.CycleFamilyRequest):
        return guard(ops.cycle_family, req)

    @app.post("/valuations", response_model=schemas.ValuationsResponse)
    def valuations(req: schemas.ValuationsRequest):
        return guard(ops.valuations, req)

    @app.post("/poly", response_model=schemas.PolyResponse)
    def poly(req: schemas.PolyRequest):
        return guard(ops.poly, req)

    @app.post("/enumerate", response_model=schemas.EnumerateResponse)
    def enumerate_classes(req: schemas.EnumerateRequest):
        return guard(ops.enumerate_classes, req)

    @app.post("/verify", response_model=schemas.VerifyResponse)
    def verify(req: schemas.VerifyRequest):
        return guard(ops.verify, req)

    @app.get("/verify/catalog", response_model=schemas.CatalogResponse)
    def catalog():
        return ops.catalog()

    return app


app = create_app()

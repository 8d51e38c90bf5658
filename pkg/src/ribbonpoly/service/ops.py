"""Operation layer shared by the HTTP routes and the command line.

Every function takes a request model and returns a response model; the
FastAPI routes and the CLI are both thin clients of this module.  Bounds can
be overridden with the environment variables RIBBONPOLY_MAX_EDGES and
RIBBONPOLY_MAX_K.
"""

from __future__ import annotations

import os
from fractions import Fraction

from ..arrows import (
    RibbonError,
    invariants,
    is_plane,
    parse,
    parse_signed,
    serialize,
    to_json_dict,
    underlying_abstract,
)
from ..canonical import enumerate_graphs
from ..duality import apply_gamma, geometric_dual, orbit, parse_gamma
from ..laurent import LaurentPoly
from ..medial import (
    all_cycle_family_graphs,
    count_admissible_valuations,
    is_checkerboard_colourable,
    medial,
)
from ..polynomials import (
    bollobas_riordan,
    chromatic,
    las_vergnas,
    penrose,
    signed_topochromatic,
    topochromatic,
    transition_statesum,
    symbolic_weights,
)
from ..verify import describe, run_all, run_verify, verify_catalog
from . import schemas


def _max_edges(default: int) -> int:
    return int(os.environ.get("RIBBONPOLY_MAX_EDGES", default))


def _max_k(default: int) -> int:
    return int(os.environ.get("RIBBONPOLY_MAX_K", default))


def info(req: schemas.GraphRequest) -> schemas.InfoResponse:
    ap, _ = parse_signed(req.graph)
    inv = invariants(ap)
    return schemas.InfoResponse(
        graph=serialize(ap), plane=is_plane(ap), **inv.as_dict())


def parse_graph(req: schemas.GraphRequest) -> schemas.GraphResponse:
    ap, _ = parse_signed(req.graph)
    return schemas.GraphResponse(graph=serialize(ap), circles=to_json_dict(ap)["circles"])


def apply_assignment(req: schemas.ApplyRequest) -> schemas.GraphResponse:
    ap = parse(req.graph)
    gamma = req.gamma if isinstance(req.gamma, dict) else parse_gamma(req.gamma)
    out = apply_gamma(ap, gamma)
    return schemas.GraphResponse(graph=serialize(out), circles=to_json_dict(out)["circles"])


def dual(req: schemas.GraphRequest) -> schemas.GraphResponse:
    out = geometric_dual(parse(req.graph))
    return schemas.GraphResponse(graph=serialize(out), circles=to_json_dict(out)["circles"])


def orbit_of(req: schemas.OrbitRequest) -> schemas.OrbitResponse:
    ap = parse(req.graph)
    bound = req.max_edges if req.max_edges is not None else _max_edges(6)
    members = orbit(ap, req.subgroup, max_edges=bound)
    return schemas.OrbitResponse(
        subgroup=req.subgroup,
        count=len(members),
        members=sorted(serialize(g) for g in members),
    )


def medial_of(req: schemas.GraphRequest) -> schemas.MedialResponse:
    ap = parse(req.graph)
    m = medial(ap)
    ok, _ = is_checkerboard_colourable(m.graph)
    origin = {}
    for ci, lbl in enumerate(m.origin):
        origin[f"circle{ci + 1}"] = lbl if lbl is not None else "(isolated vertex)"
    return schemas.MedialResponse(
        graph=serialize(ap),
        medial=serialize(m.graph),
        origin=origin,
        face_colours=list(m.face_colours),
        checkerboard_colourable=ok,
    )


def checkerboard(req: schemas.GraphRequest) -> schemas.CheckerboardResponse:
    ap = parse(req.graph)
    ok, colouring = is_checkerboard_colourable(ap)
    return schemas.CheckerboardResponse(graph=serialize(ap), colourable=ok, colouring=colouring)


def cycle_family(req: schemas.CycleFamilyRequest) -> schemas.CycleFamilyResponse:
    ap = parse(req.graph)
    bound = req.max_vertices if req.max_vertices is not None else _max_edges(6)
    members = all_cycle_family_graphs(ap, duality_only=req.duality_only, max_vertices=bound)
    return schemas.CycleFamilyResponse(
        count=len(members), members=sorted(serialize(g) for g in members))


def valuations(req: schemas.ValuationsRequest) -> schemas.ValuationsResponse:
    ap = parse(req.graph)
    if req.k > _max_k(6):
        raise RibbonError(f"k bound exceeded: {req.k} > {_max_k(6)}")
    count = count_admissible_valuations(ap, req.k, allow_equal=req.allow_equal)
    return schemas.ValuationsResponse(graph=serialize(ap), k=req.k, count=count)


_POLY_KINDS = ("penrose", "transition", "topochromatic", "br", "lv", "sbr", "chromatic")


def poly(req: schemas.PolyRequest) -> schemas.PolyResponse:
    if req.kind not in _POLY_KINDS:
        raise RibbonError(f"unknown polynomial {req.kind!r}; choose from {_POLY_KINDS}")
    ap, signs = parse_signed(req.graph)
    if req.kind == "penrose":
        p = penrose(ap)
    elif req.kind == "transition":
        if req.weights:
            missing = [l for l in ap.labels() if l not in req.weights]
            if missing:
                raise RibbonError(f"missing weight triples for {missing!r}")
            weights = {
                lbl: tuple(LaurentPoly.const(int(v)) for v in req.weights[lbl])
                for lbl in ap.labels()
            }
            for lbl, triple in weights.items():
                if len(triple) != 3:
                    raise RibbonError(f"weight triple for {lbl!r} must have three entries")
        else:
            weights = symbolic_weights(ap)
        p = transition_statesum(ap, weights, max_edges=_max_edges(10))
    elif req.kind == "topochromatic":
        p = topochromatic(ap, max_edges=_max_edges(12))
    elif req.kind == "br":
        p = bollobas_riordan(ap, max_edges=_max_edges(12))
    elif req.kind == "lv":
        p = las_vergnas(ap, max_edges=_max_edges(12))
    elif req.kind == "sbr":
        p = signed_topochromatic(ap, signs, max_edges=_max_edges(12))
    else:
        p = chromatic(underlying_abstract(ap))
    value = None
    if req.at:
        point = {}
        for var, raw in req.at.items():
            point[var] = Fraction(raw) if isinstance(raw, str) else Fraction(int(raw))
        missing = sorted(v for v in p.variables() if v not in point)
        if missing:
            raise RibbonError(f"evaluation point misses variables {missing!r}")
        value = str(p.eval_at(point))
    return schemas.PolyResponse(
        kind=req.kind, graph=serialize(ap), text=p.to_text(),
        terms=p.to_json_terms(), value=value)


def enumerate_classes(req: schemas.EnumerateRequest) -> schemas.EnumerateResponse:
    bound = req.max_edges if req.max_edges is not None else _max_edges(4)
    members = enumerate_graphs(req.edges, max_edges=bound)
    return schemas.EnumerateResponse(
        edges=req.edges, count=len(members),
        members=[serialize(g) for g in members])


def verify(req: schemas.VerifyRequest) -> schemas.VerifyResponse:
    if req.name == "all":
        reports = run_all(max_edges=req.max_edges, seed=req.seed, kmax=req.kmax)
    else:
        reports = [run_verify(req.name, max_edges=req.max_edges, seed=req.seed, kmax=req.kmax)]
    models = [schemas.VerifyReportModel(**r.as_dict()) for r in reports]
    return schemas.VerifyResponse(ok=all(r.ok for r in models), reports=models)


def catalog() -> schemas.CatalogResponse:
    names = verify_catalog()
    return schemas.CatalogResponse(
        names=names, descriptions={n: describe(n) for n in names})

"""Request and response models for the HTTP surface."""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Union

from pydantic import BaseModel, Field


class GraphRequest(BaseModel):
    graph: str = Field(description="arrow presentation text, e.g. '(a+ b+)(a- b+)'")


class GraphResponse(BaseModel):
    graph: str
    circles: List[List[Dict[str, str]]]


class InfoResponse(BaseModel):
    graph: str
    v: int
    e: int
    f: int
    k: int
    r: int
    n: int
    euler_genus: int
    genus: int
    orientable: bool
    plane: bool


class ApplyRequest(GraphRequest):
    gamma: Union[str, Dict[str, str]] = Field(
        description="assignment like 'tau(e1),delta(e2)' or {'e1': 't', 'e2': 'd'}")


class OrbitRequest(GraphRequest):
    subgroup: str = "full"
    max_edges: Optional[int] = None


class OrbitResponse(BaseModel):
    subgroup: str
    count: int
    members: List[str]


class MedialResponse(BaseModel):
    graph: str
    medial: str
    origin: Dict[str, str]
    face_colours: List[str]
    checkerboard_colourable: bool


class CheckerboardResponse(BaseModel):
    graph: str
    colourable: bool
    colouring: Optional[Dict[int, str]] = None


class CycleFamilyRequest(GraphRequest):
    duality_only: bool = False
    max_vertices: Optional[int] = None


class CycleFamilyResponse(BaseModel):
    count: int
    members: List[str]


class ValuationsRequest(GraphRequest):
    k: int
    allow_equal: bool = False


class ValuationsResponse(BaseModel):
    graph: str
    k: int
    count: int


class PolyRequest(GraphRequest):
    kind: str = Field(description="penrose | transition | topochromatic | br | lv | sbr | chromatic")
    weights: Optional[Dict[str, List[int]]] = Field(
        default=None, description="per-edge (white, black, crossing) integer triples for 'transition'")
    at: Optional[Dict[str, Union[int, str]]] = Field(
        default=None, description="evaluation point, e.g. {'x': 3}")


class PolyResponse(BaseModel):
    kind: str
    graph: str
    text: str
    terms: Dict[str, Any]
    value: Optional[str] = None


class EnumerateRequest(BaseModel):
    edges: int
    max_edges: Optional[int] = None


class EnumerateResponse(BaseModel):
    edges: int
    count: int
    members: List[str]


class VerifyRequest(BaseModel):
    name: str = "all"
    max_edges: int = 3
    seed: int = 0
    kmax: int = 3


class VerifyReportModel(BaseModel):
    name: str
    description: str
    instances: int
    failures: List[Dict[str, Any]]
    elapsed: float
    ok: bool


class VerifyResponse(BaseModel):
    ok: bool
    reports: List[VerifyReportModel]


class CatalogResponse(BaseModel):
    names: List[str]
    descriptions: Dict[str, str]

import pytest
from fastapi.testclient import TestClient

from ribbonpoly.service.app import app

THETA = "(a+ b+ c+)(c+ b+ a+)"


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_health(client):
    assert client.get("/health").json() == {"status": "ok"}


def test_parse_and_info(client):
    r = client.post("/parse", json={"graph": "(e+ e-)"})
    assert r.status_code == 200
    assert r.json()["circles"] == [[{"label": "e", "dir": "+"}, {"label": "e", "dir": "-"}]]
    r = client.post("/info", json={"graph": "(e+ e-)"})
    body = r.json()
    assert (body["v"], body["e"], body["f"]) == (1, 1, 1)
    assert body["euler_genus"] == 1 and not body["orientable"]


def test_info_theta(client):
    body = client.post("/info", json={"graph": THETA}).json()
    assert (body["v"], body["e"], body["f"], body["genus"]) == (2, 3, 3, 0)
    assert body["plane"]


def test_bad_graph_is_400(client):
    r = client.post("/info", json={"graph": "(e+ e+ e+)"})
    assert r.status_code == 400
    assert "appears on 3 arrows" in r.json()["detail"]


def test_apply_gamma_string_and_dict(client):
    r1 = client.post("/apply", json={"graph": "(e+ e+)", "gamma": "delta(e)"})
    r2 = client.post("/apply", json={"graph": "(e+ e+)", "gamma": {"e": "d"}})
    assert r1.json()["graph"] == r2.json()["graph"] == "(e+)(e-)"


def test_dual(client):
    assert client.post("/dual", json={"graph": "(e+ e+)"}).json()["graph"] == "(e+)(e-)"


def test_orbit(client):
    body = client.post("/orbit", json={"graph": "(e+ e+)", "subgroup": "full"}).json()
    assert body["count"] == 3
    body = client.post("/orbit", json={"graph": "(e+ e+)", "subgroup": "delta"}).json()
    assert body["count"] == 2


def test_medial(client):
    body = client.post("/medial", json={"graph": "(e+ e+)"}).json()
    assert body["medial"].count("c1") == 2 and body["medial"].count("c2") == 2
    assert body["checkerboard_colourable"]
    assert body["face_colours"].count("black") == 1


def test_cfg(client):
    medial_of_loop = client.post("/medial", json={"graph": "(e+ e+)"}).json()["medial"]
    body = client.post("/cfg", json={"graph": medial_of_loop}).json()
    assert body["count"] == 3
    body = client.post("/cfg", json={"graph": medial_of_loop, "duality_only": True}).json()
    assert body["count"] == 2


def test_valuations(client):
    body = client.post("/valuations", json={"graph": THETA, "k": 3}).json()
    assert body["count"] == 6


def test_poly_penrose(client):
    body = client.post("/poly", json={"kind": "penrose", "graph": THETA, "at": {"x": 3}}).json()
    assert body["text"] == "x^3 - 3*x^2 + 2*x"
    assert body["value"] == "6"
    assert body["terms"]["terms"][0] == {"coeff": 1, "monomial": {"x": 6}}


def test_poly_transition_with_weights(client):
    body = client.post("/poly", json={
        "kind": "transition", "graph": "(e+ e+)",
        "weights": {"e": [1, 0, -1]}}).json()
    assert body["text"] == "t^2 - t"


def test_poly_sbr_signed(client):
    body = client.post("/poly", json={"kind": "sbr", "graph": "(e+ e+) signs: e=-"}).json()
    assert "q^(3/2)" in body["text"]


def test_poly_lv_rejects_nonorientable(client):
    r = client.post("/poly", json={"kind": "lv", "graph": "(e+ e-)"})
    assert r.status_code == 400


def test_poly_unknown_kind(client):
    r = client.post("/poly", json={"kind": "tutte", "graph": THETA})
    assert r.status_code == 400


def test_enumerate(client):
    body = client.post("/enumerate", json={"edges": 1}).json()
    assert body["count"] == 3
    assert body["members"] == ["(e1+ e1+)", "(e1+ e1-)", "(e1+)(e1-)"]


def test_verify_endpoint(client):
    body = client.post("/verify", json={"name": "group-relations", "max_edges": 2}).json()
    assert body["ok"] and body["reports"][0]["instances"] > 0
    r = client.post("/verify", json={"name": "nope"})
    assert r.status_code == 404


def test_catalog(client):
    body = client.get("/verify/catalog").json()
    assert len(body["names"]) == 26
    assert "qsd" in body["descriptions"]


def test_checkerboard(client):
    medial_of_loop = client.post("/medial", json={"graph": "(e+ e+)"}).json()["medial"]
    body = client.post("/checkerboard", json={"graph": medial_of_loop}).json()
    assert body["colourable"] and body["colouring"]
    # an interleaved bouquet with a twist is 4-regular but not colourable
    body = client.post("/checkerboard", json={"graph": "(a+ b+ a+ b-)"}).json()
    assert not body["colourable"]


def test_poly_symbolic_transition(client):
    body = client.post("/poly", json={"kind": "transition", "graph": "(e+ e+)"}).json()
    assert body["text"] == "alpha_e*t^2 + beta_e*t + gamma_e*t"


def test_orbit_bound_respected(client):
    r = client.post("/orbit", json={"graph": THETA, "max_edges": 2})
    assert r.status_code == 400

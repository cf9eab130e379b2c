"""The FastAPI surface: request/response schemas over the shared handlers."""
import pytest
from fastapi.testclient import TestClient

from brauerlab.service.app import app


@pytest.fixture(scope="module")
def client():
    return TestClient(app)


def test_healthz(client):
    assert client.get("/healthz").json() == {"status": "ok"}


def test_group_endpoint(client):
    r = client.post("/group", json={"group": "dihedral:6"})
    assert r.status_code == 200
    d = r.json()
    assert d["order"] == 12 and d["hyperplanes"] == 6 and len(d["orbits"]) == 2
    assert d["relation1prime_pairs"]


def test_group_endpoint_rejects_unknown(client):
    assert client.post("/group", json={"group": "e8"}).status_code == 422


def test_algebra_endpoint_products_included_small(client):
    r = client.post("/algebra", json={"group": "a:1"})
    d = r.json()
    assert d["dim"] == 3 and d["products"] is not None
    assert len(d["products"]) == 9
    assert d["dimension_report"]["match"]


def test_relations_endpoint(client):
    r = client.post("/relations", json={"group": "dihedral:5"})
    d = r.json()
    assert d["count"] > 20 and d["vars"] == ["tau"]
    r = client.post("/relations", json={"kind": "cyclo_diagram", "m": 2, "n": 2})
    assert r.json()["vars"] == ["delta0", "delta1"]


def test_lk_rep_endpoint(client):
    r = client.post("/lk-rep", json={"group": "dihedral:5"})
    d = r.json()
    assert d["dim"] == 5 and d["blocks"] == [{"hyperplanes": [0, 1, 2, 3, 4], "dim": 5}]
    assert d["det_string"] is not None


def test_h3_rep_endpoint(client):
    r = client.post("/h3-rep", json={"group": "h3", "alpha": 4})
    d = r.json()
    assert d["dim"] == 5
    assert "tau" in d["det_string"]


def test_flatness_endpoint(client):
    r = client.post("/flatness", json={"group": "dihedral:6", "kind": "bgu", "rep": "lk"})
    d = r.json()
    assert d["flat"] and d["invariant"]
    r = client.post("/flatness", json={"group": "dihedral:6", "kind": "bgu",
                                       "rep": "lk", "perturb": True})
    assert r.json()["flat"] is False


def test_cellular_endpoint(client):
    r = client.post("/cellular", json={"group": "dihedral:5"})
    d = r.json()
    assert d["report"]["ok"] and d["cells"]["LK"] == 5
    r = client.post("/cellular", json={"group": "dihedral:5", "corrupted": True})
    assert r.json()["report"]["ok"] is False


def test_semisimple_endpoint(client):
    r = client.post("/semisimple", json={"group": "dihedral:5", "tau": ["7"]})
    d = r.json()
    assert d["radical"] == 0 and d["wedderburn"] == [10, 25] and d["criterion_nonzero"]
    r = client.post("/semisimple", json={"group": "dihedral:5", "tau": ["-4"]})
    assert r.json()["radical"] > 0


def test_cyclo_compare_endpoint(client):
    r = client.post("/cyclo-compare", json={"m": 2, "n": 2})
    d = r.json()
    assert d["phi"]["ok"] and d["psi"]["ok"] and d["labels_bijective"]


def test_verify_all_endpoint(client):
    r = client.post("/verify-all", json={"group": "a:2"})
    d = r.json()
    assert d["passed"] and "relation_soundness" in d["checks"]

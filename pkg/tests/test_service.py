import pytest
from fastapi.testclient import TestClient

from numbio import verify_cv_cycles
from numbio.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_info(client):
    resp = client.get("/")
    assert resp.status_code == 200
    data = resp.json()
    assert data["name"] == "numbio"
    assert "/cv" in data["endpoints"]
    assert "/verify" in data["endpoints"]


def test_cv(client):
    resp = client.get("/cv", params={"s": "0"})
    assert resp.status_code == 200
    assert resp.json() == {"seed": "0", "cv": "1"}


def test_cv_domain_error(client):
    resp = client.get("/cv", params={"s": "9" * 10})
    assert resp.status_code == 400
    assert resp.json()["detail"] == "digit 9 occurs 10 times"


def test_cv_validation_error(client):
    assert client.get("/cv", params={"s": "12a"}).status_code == 422
    assert client.get("/cv", params={"s": ""}).status_code == 422


def test_cls(client):
    resp = client.get("/cls", params={"s": "12"})
    assert resp.json() == {"seed": "12", "cls": "0110000000"}


def test_biographies(client):
    resp = client.get("/biographies", params={"s": "12"})
    data = resp.json()
    assert data["biographies"][0] == "011"
    assert len(data["biographies"]) == 8


def test_isbio(client):
    resp = client.get("/isbio", params={"m": "1101", "n": "130"})
    assert resp.json() == {"m": "1101", "n": "130", "is_biography": True}


def test_catalog(client):
    resp = client.get("/autobiographical")
    assert resp.json()["members"] == [
        "1210",
        "2020",
        "21200",
        "3211000",
        "42101000",
        "521001000",
        "6210001000",
    ]


def test_autobio_check(client):
    resp = client.get("/autobiographical/check", params={"s": "2020"})
    assert resp.json() == {"value": "2020", "autobiographical": True}


def test_classify(client):
    resp = client.get("/classify", params={"s": "0123456789"})
    assert resp.json() == {"seed": "0123456789", "verdict": "category2", "failure_depth": 2}
    resp = client.get("/classify", params={"s": "42"})
    assert resp.json() == {"seed": "42", "verdict": "infinite", "failure_depth": None}


def test_trajectory(client):
    resp = client.get("/trajectory", params={"map": "cv", "seed": "0"})
    assert resp.json() == {
        "map": "cv",
        "seed": "0",
        "prefix": ["0", "1", "01", "11", "02", "101"],
        "cycle": ["12", "011"],
    }


def test_trajectory_of_doomed_seed(client):
    resp = client.get("/trajectory", params={"map": "cv", "seed": "0123456789"})
    assert resp.status_code == 400
    assert "category2" in resp.json()["detail"]


def test_trajectory_rejects_unknown_map(client):
    resp = client.get("/trajectory", params={"map": "nope", "seed": "0"})
    assert resp.status_code == 422


def test_verify_matches_library(client):
    resp = client.get("/verify", params={"map": "cv", "lo": 0, "hi": 50})
    assert resp.status_code == 200
    assert resp.json() == verify_cv_cycles(0, 50).as_dict()


def test_verify_bad_range(client):
    resp = client.get("/verify", params={"map": "cv", "lo": 5, "hi": 3})
    assert resp.status_code == 422


def test_praise_check(client):
    resp = client.get("/praise/check", params={"a": "130", "b": "1101"})
    assert resp.json() == {"a": "130", "b": "1101", "mutually_praising": True}


def test_praise_search(client):
    resp = client.get("/praise", params={"legit_only": "true"})
    pairs = resp.json()["pairs"]
    assert {"a": "130", "b": "1101", "both_legitimate": True} in pairs
    assert all(p["both_legitimate"] for p in pairs)


def test_graph(client):
    resp = client.get("/graph", params={"map": "cv", "lo": 0, "hi": 10})
    assert resp.status_code == 200
    assert resp.headers["content-type"].startswith("text/vnd.graphviz")
    assert resp.text.startswith("digraph cv {")
    assert '"12" [shape=doublecircle];' in resp.text

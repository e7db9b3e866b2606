"""HTTP service endpoints: shapes, values, and error mapping."""

import pytest
from fastapi.testclient import TestClient

from covorbits.service.app import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    body = client.get("/health").json()
    assert body["status"] == "ok"


def test_orbits_endpoint(client):
    body = client.get("/orbits/B/2").json()
    assert body["family"] == "B" and body["rank"] == 2
    assert body["orbit_weight"] == 5 and body["count"] == 4
    by_partition = {tuple(row["partition"]): row for row in body["orbits"]}
    assert by_partition[(5,)]["special"] is True
    assert by_partition[(5,)]["qa"] == {"kind": "all", "members": None}
    assert by_partition[(1, 1, 1, 1, 1)]["qa"]["members"] == [1, 2]
    assert by_partition[(2, 2, 1)]["special"] is False


def test_orbits_rejects_unknown_family(client):
    resp = client.get("/orbits/Q/2")
    assert resp.status_code == 400
    assert resp.json()["error"]["code"] == "domain_error"


def test_bv_single_and_table(client):
    body = client.post(
        "/bv", json={"family": "B", "rank": 2, "degree": 1, "partition": [4]}
    ).json()
    assert body["dual_family"] == "C"
    assert body["pairs"] == [{"source": [4], "image": [1, 1, 1, 1, 1]}]
    table = client.post("/bv", json={"family": "C", "rank": 2, "degree": 2}).json()
    assert len(table["pairs"]) == 4


def test_bv_domain_error(client):
    resp = client.post(
        "/bv", json={"family": "B", "rank": 2, "degree": 1, "partition": [3, 1]}
    )
    assert resp.status_code == 400


def test_verify_endpoint_clean_and_deterministic(client):
    req = {"family": "B", "rank_max": 4, "degree_max": 6, "jobs": 1, "seed": 0}
    one = client.post("/verify", json=req).json()
    assert one["cells"] == 24 and one["clean"] is True
    req_parallel = dict(req, jobs=6)
    eight = client.post("/verify", json=req_parallel).json()
    assert one == eight


def test_n0_endpoint(client):
    body = client.get("/n0/B/4").json()
    assert [2, 2, 1, 1, 1, 1, 1] in body["n0_qa"]
    assert body["equal"] is True
    resp = client.get("/n0/A/4")
    assert resp.status_code == 400


def test_scan_endpoint(client):
    body = client.post("/scan", json={"family": "C", "rank_max": 5}).json()
    assert body["first_divergence_rank"] is None
    assert len(body["rows"]) == 5
    assert body["rows"][4]["n0_qa"] == [[3, 3, 2, 1, 1]]


def test_exceptional_endpoints(client):
    dump = client.get("/exceptional/E8/dump").json()
    assert dump["count"] == 70
    check = client.get("/exceptional/E6/check").json()
    assert check["clean"] is True and check["mismatches"] == 0
    n0 = client.get("/exceptional/E7/n0").json()
    assert n0["labels"] == ["(3A_1)'", "(A_3+A_1)'", "(A_5)'"]
    resp = client.get("/exceptional/F4/dump")
    assert resp.status_code == 400


def test_gdim_endpoint(client):
    body = client.post("/gdim", json={"group": "E6", "labels": [0, 1, 0, 0, 0, 0]}).json()
    assert body["dims"]["1"] == 20 and body["dims"]["2"] == 1
    assert body["center_dim"] == 1
    assert body["levi_type"] == "A5"
    resp = client.post("/gdim", json={"group": "E6", "labels": [0, 3, 0, 0, 0, 0]})
    assert resp.status_code == 400


def test_validation_error_shape(client):
    resp = client.post("/verify", json={"family": "B"})
    assert resp.status_code == 422
    assert resp.json()["error"]["code"] == "validation_error"

# Copyright 2026 The mdual Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import json
import os
import pathlib

import pytest

import mdual

FIXTURES = pathlib.Path(os.environ.get("MDUAL_FIXTURE_DIR",
                                       pathlib.Path(__file__).resolve().parents[2] / "fixtures"))


def load(name):
    return json.loads((FIXTURES / name).read_text())


def test_validate_space_and_frame():
    s = mdual.validate(load("s1.space.json"))
    assert s["valid"] and s["kind"] == "space" and s["points"] == 2
    f = mdual.validate(load("chain3-id.frame.json"))
    assert f["class"]["equivalence"]


def test_invalid_documents_raise():
    with pytest.raises(mdual.MdualError) as e:
        mdual.validate(load("m3.lattice.json"))
    assert e.value.kind == "NotDistributive"
    with pytest.raises(mdual.MdualError) as e:
        mdual.points(load("chain3-id.frame.json"), "nope")
    assert e.value.kind == "InvalidInput"


def test_points_round_trip_through_omega():
    frame = load("chain3-id.frame.json")
    fa = mdual.points(frame, "relspq_c")
    assert fa["pass"] and len(fa["points"]) == 2
    assert mdual.check("spatial", {"chain3-id": frame}, mode="relspq_c")["pass"]


def test_omega_of_s1_is_the_btt_frame():
    r = mdual.omega(load("s1.space.json"))
    assert r["pass"]
    assert len(r["frame"]["lattice"]["elements"]) == 3


def test_sober_failure_is_reported_not_raised():
    r = mdual.check("sober", {"doubled": load("doubled-point.space.json")}, mode="relspq_c")
    assert r["pass"] is False


def test_modelcheck_and_bisim():
    s1 = load("s1.space.json")
    r = mdual.modelcheck(s1, load("s1.valuation.json"), "box p", point="x")
    assert r["satisfied"] is True
    b = mdual.bisim(s1, s1, load("s1-const-y.map.json"), load("s1-const-y.valuations.json"))
    assert b["pass"] and b["depth"] == 4
    with pytest.raises(mdual.MdualError) as e:
        mdual.bisim(load("loop.space.json"), load("fork.space.json"), load("loop-to-fork.map.json"),
                    load("loop-to-fork.valuations.json"))
    assert e.value.kind == "PreconditionViolated"


def test_idl_and_sweep():
    assert mdual.idl(load("chain3-btt.frame.json"))["unit_is_iso"]
    r = mdual.sweep(lattices=2, spaces=1, modes=["relspq"])
    assert r["pass"] and r["frames"] > 0
    assert "frame" in mdual.render_human(mdual.validate(load("chain3-id.frame.json")))


def test_documents_match_schemas():
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    schema_dir = FIXTURES.parent / "schemas"
    schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = referencing.Registry().with_resources(
        (s["$id"], referencing.Resource.from_contents(s)) for s in schemas.values())

    def check(kind, doc):
        jsonschema.Draft202012Validator(schemas[kind], registry=registry).validate(doc)

    for path in sorted(FIXTURES.glob("*.json")):
        kind = path.name.split(".")[-2]
        kind = {"valuations": "valuation", "map": "morphism"}.get(kind, kind)
        check(kind, json.loads(path.read_text()))
    check("frame", mdual.omega(load("s1.space.json"))["frame"])

# Copyright 2026 The coalg Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Smoke tests for the Python extension."""

import json
import pathlib

import pytest

import coalg

INSTANCES = pathlib.Path(__file__).resolve().parents[2] / "instances"


def test_mobius():
    assert coalg.mobius(["x", "y"], [("x", "y")]) == "1 - x - y + x*y"
    assert coalg.mobius(["x", "y"]) == "1 - x - y"


def test_kleene_star():
    assert coalg.kleene_star(["x"], [], "x", 3) == "1 + x + x*x + x*x*x"
    with pytest.raises(coalg.CoalgError):
        coalg.kleene_star(["x"], [], "1 + x", 3)


def test_instance():
    inst = coalg.Instance(str(INSTANCES / "frob.json"))
    assert inst.family == "FrobeniusQuotient"
    assert "xbar" in inst.names()
    assert inst.degree_upper_bound("xbar", 10) == (2, "Certified")
    assert not inst.is_grouplike("xbar")


def test_instance_from_json():
    doc = {
        "ring": "Z/4",
        "bialgebra": {"family": "InfiltrationQ", "params": {"q": "2"}, "truncation": 6},
        "elements": {"g": [{"basis": "1", "coeff": "1"}, {"basis": "x", "coeff": "2"}]},
    }
    inst = coalg.Instance.from_json(json.dumps(doc))
    assert inst.is_grouplike("g")
    assert inst.delta("x") == "[1 (x) x] + [x (x) 1] + 2*[x (x) x]"


def test_cli():
    code, out, _ = coalg.run(["mobius", "--alphabet", "x,y", "--edges", "x-y"])
    assert code == 0
    assert json.loads(out) == {"series": "1 - x - y + x*y"}
    code, _, err = coalg.run(["unipotent", "--element", "x +"])
    assert code == 2
    assert err


def test_suites():
    names = coalg.suite_names()
    assert len(names) == 13
    result = coalg.run_suite("bounds", 42)
    assert result["passed"]
    assert result["criterion"] == 3

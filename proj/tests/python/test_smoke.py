import json
import os
import subprocess

import pytest

import ncspectrum


def test_k0_standard_and_diagram_agree():
    standard = ncspectrum.k0({"blocks": [2, 3]})
    diagram = ncspectrum.k0({"blocks": [2, 3]}, method="diagram", stabilize=1)
    assert standard["group"] == "Z^2"
    assert diagram["group"] == "Z^2"
    assert diagram["eta"]["passed"] is True


def test_nonunital_kernel():
    result = ncspectrum.k0([2], method="diagram", nonunital=True)
    assert result["group"] == "Z"
    assert result["unitalized_group"] == "Z^2"


def test_colimit_pushout():
    diagram = {
        "nodes": [{"id": n, "generators": 1} for n in "abc"],
        "edges": [
            {"id": "u", "source": "a", "target": "b", "images": [[2]]},
            {"id": "v", "source": "a", "target": "c", "images": [[2]]},
        ],
    }
    result = ncspectrum.colimit(diagram)
    assert result["group"] == "Z ⊕ Z/2"
    assert result["invariant_factors"] == {"free_rank": 1, "torsion": [2]}


def test_theorem1_report():
    report = ncspectrum.verify_theorem1([1, 1], stabilize=1, random_homs=2, seed=3)
    assert report["passed"] is True
    assert [c["name"] for c in report["checks"]][:2] == ["invariant_factors", "eta"]


def test_ideals_and_subdiagram():
    report = ncspectrum.ideals([2, 3])
    assert report["passed"] is True
    assert report["t_tilde"]["size"] == 4
    nodes = ncspectrum.subdiagram([2], spec={"pythagorean": False})["nodes"]
    assert len(nodes) == 2


def test_snf():
    result = ncspectrum.snf([[2, 4], [6, 8]])
    assert result["diagonal"] == [2, 4]
    assert all(result["checks"].values())


def test_validation_error():
    with pytest.raises(ncspectrum.ValidationError):
        ncspectrum.k0({"blocks": [0]})
    with pytest.raises(ValueError):
        ncspectrum.snf([[1, "x"]])


@pytest.mark.skipif("NCS_CLI" not in os.environ, reason="command-line tool not located")
def test_cli_matches_module():
    out = subprocess.run(
        [os.environ["NCS_CLI"], "--format", "json", "k0", "--algebra", "[2,3]"],
        check=True, capture_output=True, text=True,
    ).stdout
    assert json.loads(out) == ncspectrum.k0([2, 3])

import json

import pytest

import infchar

GL2 = {"family": "GL", "n": 2}


def gl2_spec(**overrides):
    spec = {
        "group": GL2,
        "embeddings": [{"sigma": "s0", "taus": ["t0"], "action": [[0]]}],
        "sen": {"t0": {"eigenvalues": ["3", "0"]}},
        "mode": "C",
        "twisting_element": ["1", "0"],
    }
    spec.update(overrides)
    return spec


def test_compute_matches_the_symmetric_square():
    report = infchar.compute(gl2_spec(), check_roundtrip=True)
    sigma = report["sigma_characters"]["s0"]
    assert sigma["dominant_representative"] == ["5/2", "-1/2"]
    assert sigma["algebraic_match"] == ["2", "0"]
    assert report["pi_alg"] == {"s0": ["2", "0"]}
    assert report["tau_independence"] is True
    assert report["hodge_tate"] == {"t0": {"value": True, "diagnostic": ""}}
    assert report["nu"] == {"t0": {"orbit_size": 2, "representative": ["3", "0"]}}
    assert report["regular"]["t0"]["strictly_regular"] is True
    assert report["roundtrip"] is True
    assert report["failures"] == []


def test_report_json_is_canonical_and_float_free():
    text = infchar.compute_json(json.dumps(gl2_spec()))
    parsed = json.loads(text)
    assert json.dumps(parsed, indent=2, sort_keys=True) + "\n" == text

    def no_floats(node):
        if isinstance(node, float):
            raise AssertionError("float leaked into the report")
        if isinstance(node, dict):
            for v in node.values():
                no_floats(v)
        if isinstance(node, list):
            for v in node:
                no_floats(v)

    no_floats(parsed)


def test_partial_report_for_non_hodge_tate_data():
    nilpotent = gl2_spec(sen={"t0": {"matrix": [["0", "1"], ["0", "0"]]}})
    del nilpotent["twisting_element"]
    report = infchar.compute(nilpotent)
    assert report["hodge_tate"]["t0"]["value"] is False
    assert "squarefree" in report["hodge_tate"]["t0"]["diagnostic"]
    assert report["nu"] == {}
    assert report["pi_alg"] is None
    assert report["failures"]
    with pytest.raises(infchar.ComputationError):
        infchar.compute(nilpotent, strict=True)


def test_validation_errors():
    with pytest.raises(infchar.ValidationError, match="byte"):
        infchar.validate('{"group": {"family": "GL"')
    with pytest.raises(infchar.ValidationError):
        infchar.validate(gl2_spec(extra=1))
    with pytest.raises(infchar.ValidationError, match="strings"):
        infchar.validate(gl2_spec(sen={"t0": {"eigenvalues": [3, 0]}}))


def test_family_rings_specialize_symbolically():
    spec = gl2_spec(
        coefficients={"kind": "family", "base": {"kind": "rationals"}, "variables": ["x"]},
        sen={"t0": {"eigenvalues": ["x+2", "-x"]}},
        mode="L",
    )
    del spec["twisting_element"]
    report = infchar.compute(spec)
    assert report["failures"] == []
    point = report["sigma_characters"]["s0"]["point"]
    assert any("x" in entry for entry in point)


def test_rootdata_helpers():
    assert infchar.weyl_order(GL2) == 2
    assert infchar.weyl_order({"family": "Sp", "n": 2}) == 8
    assert infchar.delta(GL2) == ["1/2", "-1/2"]
    assert infchar.twisting(GL2) == ["0", "-1"]
    assert infchar.twisting({"family": "PGL", "n": 2}) is None

    sp4 = infchar.builtin_datum("Sp", 2)
    assert infchar.dualize(infchar.dualize(sp4)) == sp4
    assert infchar.dualize(sp4) != sp4  # SO_5 has the transposed datum

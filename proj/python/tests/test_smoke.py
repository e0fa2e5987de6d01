import json
from pathlib import Path

import pytest

import acm_py as acm

FIXTURES = Path(__file__).resolve().parents[2] / "tests" / "fixtures"


def fixture(name):
    return acm.load(FIXTURES / f"{name}.acm.json")


def test_load_and_dump_round_trip():
    text = (FIXTURES / "inference.acm.json").read_text()
    model = acm.loads(text)
    assert acm.dumps(model) == text
    assert model.notation == "sacm"
    assert "C1" in model


def test_check_reports_single_rule():
    diags = acm.check(fixture("violation_sacm_e1"))
    assert {d["rule_id"] for d in diags} == {"SACM-E1"}
    assert acm.check(fixture("inference")) == []


def test_gsn_transform_counts():
    model, trace, warnings = acm.gsn_to_sacm(fixture("r1_gsn"))
    assert model.count("Claim") == 4
    assert model.count("AssertedInference") == 1
    assert model.count("AssertedEvidence") == 2
    assert {src for src, _, _ in trace} >= {"G1", "S1", "SB1"}
    assert warnings == []


def test_cae_transform():
    model, _, _ = acm.cae_to_sacm(fixture("r2_cae"))
    assert model.count("AssertedInference") == 2


def test_citation_chain():
    chain = acm.resolve_citation(fixture("etcs"), "APB1.G2")
    assert chain == ["APB1.G2", "API1.G2", "AP1.G2"]


def test_instantiate_from_dict():
    pattern = fixture("safety_pattern")
    bindings = json.loads((FIXTURES / "safety_pattern_bindings.json").read_text())
    concrete, trace = acm.instantiate(pattern, bindings)
    assert sum(1 for g in concrete.gids() if g.startswith("G2.")) == 2
    assert acm.verify_instantiation(concrete, pattern) == []
    assert trace


def test_missing_binding_raises():
    with pytest.raises(acm.AcmError) as info:
        acm.instantiate(fixture("safety_pattern"), {"roles": {}})
    assert info.value.code == "MissingBinding"


def test_evaluate_and_roots():
    model = fixture("etcs")
    evidence = {"AP1.E1": True, "AP1.E2": True, "AP2.E3": True}
    assert acm.root_claims(model) == ["APB1.G1"]
    assert acm.evaluate(model, evidence)["APB1.G1"] == "supported"
    evidence["AP1.E2"] = False
    assert acm.evaluate(model, evidence)["APB1.G1"] == "unsupported"


def test_render_markdown():
    text = acm.render(fixture("multilingual"), lang="de")
    assert text.startswith("# Assurance case report")
    assert "Alle Gefährdungen sind identifiziert" in text
    with pytest.raises(acm.AcmError):
        acm.render(fixture("multilingual"), format="pdf")

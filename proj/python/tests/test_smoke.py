import json

import pytest

import limitada


def test_binary_sequence():
    assert limitada.full_binary_sequence(2) == "00#01#10#11#"
    assert limitada.binseq_length(3) == 32


def test_m1_pipeline_reaches_thirty_states():
    cg = limitada.generate_witness("Mn", "cg", 1)
    doc = json.loads(cg)
    assert doc["kind"] == "cg-2dfa"
    assert len(doc["annotation_alphabet"]) == 4
    nfa = limitada.convert("project", [cg])
    dfa = limitada.convert("powerset", [nfa])
    minimal = limitada.convert("minimize", [dfa])
    assert limitada.states(minimal) == 30
    for m in range(61):
        assert limitada.accepts(minimal, "a" * m) == limitada.m_n_member(1, m)


def test_run_cg_gives_annotation():
    cg = limitada.generate_witness("Mn", "cg", 1)
    ok, detail = limitada.decide(cg, "aaaaaa")
    assert ok
    assert detail.startswith("annotation")
    assert not limitada.accepts(cg, "a" * 11)


def test_factor_machine():
    fact = limitada.generate_binseq("fact2dfa", 2)
    assert limitada.kind(fact) == "2dfa"
    assert limitada.accepts(fact, "01#10")
    assert not limitada.accepts(fact, "00#00")


def test_dollar_star_size():
    one = limitada.generate_binseq("family:pref-exact:2", 1)
    star = limitada.convert("dollar-star", [one])
    assert limitada.states(star) == 2 * limitada.states(one) + 1


def test_analysis():
    assert limitada.primorial(13) == 30030
    assert limitada.fooling_check(2) == {"pairs": 64, "ok": True}
    assert limitada.bound_report(3)["required_hold"]


def test_report():
    empty = limitada.report(json.dumps({"name": "e", "rows": []}))
    assert empty.count("\n") == 1
    rows = json.loads(
        limitada.report(
            json.dumps({"name": "d", "rows": [{"pipeline": "dollar-star", "n": 1}]}),
            format="json",
        )
    )["rows"]
    assert rows[0]["converted"] == 5 and rows[0]["ok"]


def test_errors():
    with pytest.raises(limitada.InputError):
        limitada.states('{"kind":')
    with pytest.raises(ValueError):
        limitada.convert("nope", [limitada.generate_binseq("F")])
    with pytest.raises(limitada.InputError):
        limitada.convert("minimize", [limitada.generate_binseq("fact2dfa", 1)])

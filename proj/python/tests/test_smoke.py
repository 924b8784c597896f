import pytest

import fairdiv


@pytest.fixture(scope="module")
def two_agent_instance():
    return {
        "n": 2,
        "m": 2,
        "valuations": [
            {"type": "additive", "values": ["100", "1"]},
            {"type": "additive", "values": ["1", "100"]},
        ],
    }


def test_check_verdicts(two_agent_instance):
    favorites = {"bundles": [[1], [2]]}
    swapped = {"bundles": [[2], [1]]}
    assert fairdiv.check(two_agent_instance, favorites, "mma")["satisfied"]
    report = fairdiv.check(two_agent_instance, swapped, "mma")
    assert not report["satisfied"]
    assert [a["satisfied"] for a in report["agents"]] == [False, False]
    assert fairdiv.check(two_agent_instance, swapped, "mms")["satisfied"]


def test_partition_solvers(two_agent_instance):
    assert fairdiv.mms(two_agent_instance, agent=1, k=2)["value"] == "1"
    lex = fairdiv.leximin(two_agent_instance, agent=1, k=2)
    assert lex["partition"]["value_vector"] == ["1", "100"]
    assert fairdiv.minimax(two_agent_instance, agent=1, k=2)["value"] == "100"


def test_solve_and_search(two_agent_instance):
    result = fairdiv.solve(two_agent_instance, algo="matching")
    assert result["allocation"]["bundles"] == [[1], [2]]
    assert result["guarantee"] == "mmax"
    outcome = fairdiv.search(two_agent_instance, "ef")
    assert outcome["exists"]
    assert outcome["witness"]["bundles"] == [[1], [2]]


def test_generate_deterministic():
    a = fairdiv.generate("binary-additive", n=3, m=5, seed=7)
    b = fairdiv.generate("binary-additive", n=3, m=5, seed=7)
    assert a == b
    assert a["n"] == 3 and a["m"] == 5
    for valuation in a["valuations"]:
        assert set(valuation["values"]) <= {"0", "1"}


def test_catalog_contains_worked_instances():
    entries = {e["id"]: e for e in fairdiv.catalog()}
    assert "example2" in entries and "lemma3_n2_k2" in entries
    instance = entries["example2"]["instance"]
    assert fairdiv.mms(instance, agent=1, k=4)["value"] == "1/2"


def test_errors():
    with pytest.raises(ValueError):
        fairdiv.check({"n": 1}, {"bundles": [[1]]}, "ef")
    with pytest.raises(RuntimeError):
        inst = fairdiv.generate("additive", n=3, m=12, seed=1)
        fairdiv.mms(inst, agent=1, k=3, max_nodes=10)

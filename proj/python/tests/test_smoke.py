import pytest

import ancestor


def running_example():
    return ancestor.space([[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, 1]], 4, "Q")


def test_analyze_running_example():
    out = ancestor.analyze(running_example())
    assert out["d"] == 3
    assert out["j"] == 4
    assert out["tau"] == 2
    assert out["H"] == ancestor.dims(out["H"], 3, 4)["H"]


def test_enumerate_matches_counts():
    seqs = ancestor.enumerate(4, 5)
    total = 0
    for t in range(1, 6):
        for c in range(0, 6):
            total += ancestor.count_by_tau(4, 5, t, c)
    assert len(seqs) == total
    assert "1(2)" in seqs


def test_hasse_edges_follow_order():
    diagram = ancestor.hasse(4, 5)
    nodes = diagram["nodes"]
    for a, b in diagram["edges"]:
        assert ancestor.compare(nodes[a], nodes[b], 4, 5) == "less"
    assert ancestor.hasse_dot(4, 5).startswith("digraph")


def test_waring_and_related_roundtrip():
    v = ancestor.random_space(2, 4, "Fp:101", 7)
    assert v["degree"] == 4
    assert len(v["basis"]) == 2
    assert "gad" in ancestor.waring(v)
    assert ancestor.related(v)


def test_precondition_error():
    with pytest.raises(ValueError):
        ancestor.dims("1,2,3", 5, 2)


def test_deterministic_random():
    assert ancestor.random_space(3, 6, seed=11) == ancestor.random_space(3, 6, seed=11)

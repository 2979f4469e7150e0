"""Smoke tests for the python bindings."""

import pytest

import cyclegraph as cg


def test_factorize():
    assert cg.factorize(12) == [(2, 2), (3, 1)]
    assert cg.factorize(1) == []
    with pytest.raises(ValueError):
        cg.factorize(0)


def test_dihedral_graph():
    g = cg.dihedral(6)
    assert g.order == 12
    assert g.descriptor == "D_12"
    gamma = cg.build_gamma(g)
    assert len(gamma.vertices) == 10
    assert len(gamma.edges) == 10
    summary = cg.summarize(gamma)
    assert summary["bipartite"] and summary["connected"]
    assert summary["diameter"] == 3
    assert summary["girth"] == 4


def test_quaternion_star():
    gamma = cg.build_gamma(cg.generalized_quaternion(3))
    summary = cg.summarize(gamma)
    assert summary["vertex_count"] == 5
    assert summary["edge_count"] == 4
    assert summary["star_graph"]
    assert summary["girth"] == "inf"


def test_labels_and_dot():
    gamma = cg.build_gamma(cg.dihedral(6))
    assert gamma.labels[0] == "Z1#0"
    assert "Z6#0" in gamma.labels
    dot = cg.render_dot(gamma)
    assert dot.count(" -- ") == 10
    assert 'label="Z6#0"' in dot


def test_distance():
    gamma = cg.build_gamma(cg.cyclic(12))
    trivial = next(i for i, v in enumerate(gamma.vertices) if v.order == 1)
    whole = next(i for i, v in enumerate(gamma.vertices) if v.order == 12)
    assert cg.distance(gamma, trivial, whole) == 3


def test_group_queries():
    g = cg.minimal_noncyclic(2, 2, 3)
    assert g.order == 12
    assert not cg.is_nilpotent(g)
    assert cg.count_subgroups_of_order(g, 3) == 1
    assert len(cg.all_subgroups(g)) == 8
    assert cg.find_conjugation_exponent(2, 5) == 4

    sl23 = cg.from_matrix_generators(3, [(1, 1, 0, 1), (0, -1, 1, 0)])
    assert sl23.order == 24
    assert len(cg.cyclic_subgroups(sl23)) == 13

    table = [[0, 1], [1, 0]]
    z2 = cg.from_cayley_table(table)
    assert z2.element_orders == [1, 2]


def test_audit_preset():
    report = cg.audit_preset("paper-figures")
    assert report["totals"]["mismatch"] == 0
    assert report["totals"]["documented"] >= 3
    ids = {entry["id"] for entry in cg.known_discrepancies()}
    assert ids == {"genq-center-degree", "minnc-edge-count", "minnc-diameter"}


def test_audit_file(tmp_path):
    spec = tmp_path / "tiny.spec"
    spec.write_text("cyclic 1..20\ndicyclic 2..5\n")
    report = cg.audit_file(str(spec))
    assert report["totals"]["mismatch"] == 0
    assert len(report["groups"]) == 24

import json
from math import factorial

import pytest

from bubblecross import graphs, perms
from bubblecross.errors import DimensionGuardError


@pytest.mark.parametrize("n,vertices,edges", [(2, 2, 1), (3, 6, 6), (4, 24, 36), (5, 120, 240)])
def test_bn_sizes(n, vertices, edges):
    g = graphs.build_bn(n)
    assert g.vertex_count == vertices == factorial(n)
    assert g.edge_count == edges == factorial(n) * (n - 1) // 2


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bn_regular_and_connected(n):
    g = graphs.build_bn(n)
    assert all(len(nbrs) == n - 1 for nbrs in g.adj.values())
    assert graphs.is_connected(g)


def test_b3_is_a_six_cycle():
    g = graphs.build_bn(3)
    assert g.vertex_count == 6
    assert all(len(nbrs) == 2 for nbrs in g.adj.values())
    assert graphs.is_connected(g)  # 2-regular and connected on 6 vertices: a 6-cycle


def test_bn_guard():
    with pytest.raises(DimensionGuardError):
        graphs.build_bn(12)
    with pytest.raises(ValueError):
        graphs.build_bn(1)
    # the guard is overridable
    assert graphs.build_bn(4, guard=4).vertex_count == 24


def test_bn_adjacency_matches_neighbors():
    g = graphs.build_bn(4)
    for p in g.vertices():
        assert sorted(g.neighbors_of(p)) == sorted(perms.neighbors(p))
        assert g.degree_of(p) == 3


def test_bprime_structure():
    g = graphs.build_bprime(6)
    assert g.core is not None and len(g.core) == 120  # 6!/6
    assert g.vertex_count == 240
    assert g.edge_count == 360
    core_labels = [p for p in g.vertices() if g.is_core(p)]
    assert all(g.degree_of(p) == 5 for p in core_labels)
    # every edge touches the core
    for u, v in g.edge_pairs():
        assert g.is_core(u) or g.is_core(v)
    # boundary vertices are exactly the non-core endpoints of included edges
    for p in g.vertices():
        if not g.is_core(p):
            assert any(g.is_core(q) for q in g.neighbors_of(p))


def test_bprime_core_count_n7():
    g = graphs.build_bprime(7)
    assert len(g.core) == factorial(7) // 6


def test_bprime_needs_n6():
    with pytest.raises(ValueError):
        graphs.build_bprime(5)


def test_bprime_matches_canonical_sector():
    bp = graphs.build_bprime(6)
    res = graphs.symmetry_classes(6)
    got = {frozenset(e) for e in bp.edge_pairs()}
    assert got == set(res.sector_edges[(1, 2, 3)])


@pytest.mark.parametrize("n", [5, 6])
def test_symmetry_classes(n):
    res = graphs.symmetry_classes(n)
    assert len(res.classes) == 6
    assert {len(c) for c in res.classes.values()} == {factorial(n) // 6}
    assert sum(len(c) for c in res.classes.values()) == factorial(n)
    assert res.all_isomorphic
    # witness maps really carry one core onto the other
    for (o1, o2), phi in res.witness_maps.items():
        mapped = {tuple(phi.get(v, v) for v in p) for p in res.classes[o1]}
        assert mapped == set(res.classes[o2])


def test_symmetry_guard():
    with pytest.raises(ValueError):
        graphs.symmetry_classes(3)
    with pytest.raises(DimensionGuardError):
        graphs.symmetry_classes(11)


def test_planarity_small_graphs():
    assert graphs.is_planar(graphs.build_bn(2))
    assert graphs.is_planar(graphs.build_bn(3))
    assert graphs.is_planar(graphs.build_bn(4))
    assert not graphs.is_planar(graphs.build_bn(5))


def test_planarity_classic_sanity():
    k5 = [(i, j) for i in range(5) for j in range(i + 1, 5)]
    k33 = [(i, 3 + j) for i in range(3) for j in range(3)]
    c6 = [(i, (i + 1) % 6) for i in range(6)]
    assert not graphs.edges_planar(k5)
    assert not graphs.edges_planar(k33)
    assert graphs.edges_planar(c6)


def test_label_str():
    assert graphs.label_str((1, 2, 5, 6, 3, 4)) == "125634"
    assert graphs.label_str(tuple(range(1, 11))) == "1,2,3,4,5,6,7,8,9,10"


def test_dot_export():
    g = graphs.build_bn(4)
    dot = graphs.to_dot(g)
    lines = dot.strip().splitlines()
    assert lines[0] == "graph B4 {"
    assert lines[-1] == "}"
    assert sum(1 for ln in lines if '";' in ln and "--" not in ln) == 24
    assert sum(1 for ln in lines if "--" in ln) == 36
    assert '  "1234";' == lines[1]  # lexicographically first


def test_json_export_roundtrip():
    g = graphs.build_bn(4)
    data = json.loads(graphs.to_json(g))
    assert data["n"] == 4
    assert len(data["vertices"]) == 24
    assert data["vertices"] == sorted(data["vertices"])
    assert len(data["edges"]) == 36
    assert all(u < v for u, v in data["edges"])


def test_json_export_core_metadata():
    data = json.loads(graphs.to_json(graphs.build_bprime(6)))
    assert data["core_count"] == 120
    assert len(data["vertices"]) == 240


def test_exports_deterministic():
    a = graphs.to_json(graphs.build_bn(4))
    b = graphs.to_json(graphs.build_bn(4))
    assert a == b
    assert graphs.to_dot(graphs.build_bn(3)) == graphs.to_dot(graphs.build_bn(3))


def test_has_edge_and_membership_errors():
    g = graphs.build_bn(3)
    assert g.has_edge((1, 2, 3), (2, 1, 3))
    assert not g.has_edge((1, 2, 3), (3, 2, 1))
    with pytest.raises(ValueError):
        g.degree_of((1, 2, 3, 4))


def test_sector_counts_cover_all_edges():
    res = graphs.symmetry_classes(5)
    every = set().union(*res.sector_edges.values())
    g = graphs.build_bn(5)
    assert len(every) == g.edge_count

import pytest

from signedgraph import (
    Edge,
    EdgeKind,
    SgError,
    SignedGraph,
    circle_sign,
    components,
    enumerate_circles,
    fundamental_system,
    half,
    link,
    loop,
    loose,
    parse,
    serialize,
    spanning_forest,
)
from conftest import random_graph, seeded


def test_edge_validation():
    with pytest.raises(SgError):
        link("e", 0, 0, 1)  # a link needs distinct ends
    with pytest.raises(SgError):
        Edge("e", EdgeKind.LINK, (0, 1), 0)
    with pytest.raises(SgError):
        Edge("h", EdgeKind.HALF, (0,), 1)  # half edges are unsigned
    with pytest.raises(SgError):
        Edge("l", EdgeKind.LOOSE, (0,))


def test_duplicate_ids_rejected():
    with pytest.raises(SgError):
        SignedGraph(2, [link("e", 0, 1, 1), link("e", 0, 1, -1)])


def test_parse_roundtrip(sigma4):
    assert sigma4.n == 4
    assert len(sigma4.edges) == 7
    assert sigma4.edge("b").sign == -1
    assert sigma4.edge("h").kind is EdgeKind.HALF
    again = parse(serialize(sigma4))
    assert again == sigma4


def test_parse_errors_name_the_line():
    with pytest.raises(SgError, match="line 1"):
        parse("not a graph\n")
    with pytest.raises(SgError, match="line 3"):
        parse("sg 1\nn 2\nedge a 1 5 +\n")
    with pytest.raises(SgError, match="line 3"):
        parse("sg 1\nn 2\nedge a 1 2 ?\n")
    with pytest.raises(SgError, match="'n' directive"):
        parse("sg 1\nedge a 1 2 +\nn 2\n")


def test_parse_comments_and_loops():
    g = parse("sg 1\n# comment\nn 2\nedge a 1 1 -  # a negative loop\nloose x\n")
    assert g.edge("a").kind is EdgeKind.LOOP
    assert g.edge("x").kind is EdgeKind.LOOSE


def test_serialize_deterministic(sigma4):
    assert serialize(sigma4) == serialize(sigma4)


def test_components():
    g = SignedGraph(5, [link("a", 0, 1, 1), link("b", 3, 4, -1), loose("x")])
    assert components(g) == [(0, 1), (2,), (3, 4)]
    assert components(g, ["a"]) == [(0, 1), (2,), (3,), (4,)]


def test_circles_triangle_plus_chord():
    g = SignedGraph(
        3,
        [
            link("a", 0, 1, 1),
            link("b", 1, 2, 1),
            link("c", 0, 2, -1),
            link("d", 0, 1, -1),  # parallel to a: digon
        ],
    )
    circles = enumerate_circles(g)
    # triangle twice (via a or d), one digon
    assert frozenset({"a", "d"}) in circles
    assert frozenset({"a", "b", "c"}) in circles
    assert frozenset({"d", "b", "c"}) in circles
    assert len(circles) == 3
    assert circle_sign(g, {"a", "d"}) == -1
    assert circle_sign(g, {"a", "b", "c"}) == -1


def test_loop_is_a_circle():
    g = SignedGraph(1, [loop("l", 0, -1), half("h", 0)])
    assert enumerate_circles(g) == [frozenset({"l"})]


def test_circle_count_k4():
    g = SignedGraph(
        4,
        [link(f"{i}{j}", i, j, 1) for i in range(4) for j in range(i + 1, 4)],
    )
    assert len(enumerate_circles(g)) == 7  # 4 triangles + 3 quadrilaterals


def test_spanning_forest_and_fundamental_system():
    g = SignedGraph(
        4,
        [link(f"{i}{j}", i, j, 1) for i in range(4) for j in range(i + 1, 4)],
    )
    t = spanning_forest(g)
    assert len(t) == 3
    system = fundamental_system(g, t)
    assert len(system) == 3
    for e, circ in system.items():
        assert e in circ
        assert circ - {e} <= t
        assert circ in enumerate_circles(g)
    # every circle of K4 is a symmetric difference of fundamental circles
    from itertools import combinations

    spans = set()
    basis = list(system.values())
    for r in range(1, 4):
        for combo in combinations(basis, r):
            acc = frozenset()
            for c in combo:
                acc = acc ^ c
            spans.add(acc)
    for c in enumerate_circles(g):
        assert c in spans


def test_circle_enumeration_cap():
    g = SignedGraph(
        4,
        [link(f"{i}{j}", i, j, 1) for i in range(4) for j in range(i + 1, 4)],
    )
    with pytest.raises(SgError):
        enumerate_circles(g, cap=3)

import json
from pathlib import Path

import pytest

from kostroot import bases as B
from kostroot import build
from kostroot import graphs as G
from kostroot import kostant as K
from kostroot.cli import main
from listed_bases import F4_BASES

GOLDEN = Path(__file__).parent / "golden"


def test_root_graph_sl21():
    rs = build("sl(2|1)")
    g = G.graph_of(rs, [(1, -1, 0), (0, 1, -1)])
    assert len(g.vertices) == 6 and len(g.edges) == 4
    assert [len(c) for c in G.components(g)] == [3, 3]
    for e in g.edges:
        assert tuple(b - a for a, b in zip(e.source, e.target)) == tuple(e.sign * x for x in e.label)


def test_graph_of_rejects_non_base():
    with pytest.raises(G.GraphError):
        G.graph_of(build("sl(2|1)"), [(1, -1, 0)])


def test_toral_fiber_graph_is_two_isolated_vertices():
    KS = K.project_by_toral(build("A2"), [(1, 0, -1)])
    g = G.fiber_graph(KS, (1,))
    assert len(g.vertices) == 2 and not g.edges
    assert not G.is_connected(g)
    assert G.is_connected(G.fiber_graph(KS, (2,)))


def test_fiber_graph_rejects_zero_and_non_roots():
    KS = K.project_by_toral(build("A2"), [(1, 0, -1)])
    with pytest.raises(G.GraphError):
        G.fiber_graph(KS, (0,))
    with pytest.raises(G.GraphError):
        G.fiber_graph(KS, (5,))


def test_f4_fibers_connected_and_edges_lift():
    rs = build("F4")
    S1 = F4_BASES["S1"]
    I, J = S1[:1], S1[:2]
    KS = K.project(rs, I, S1)
    assert len(KS.vectors) == 20
    assert all(G.is_connected(G.fiber_graph(KS, t)) for t in KS.vectors)
    KJ = K.project(rs, J, S1)
    for nu in KJ.vectors:
        rep = G.edge_lifting_report(rs, S1, I, J, nu)
        assert rep.ok and rep.edges_equal, nu


def test_projected_graph_drops_loops():
    rs = build("osp(3|2)")
    base = B.enumerate_bases(rs)[0].elements
    KJ = K.project(rs, base[:1], base)
    KI = K.project(rs, [], base)
    for nu in KJ.vectors:
        g = G.fiber_graph(KJ, nu)
        p = G.project_graph(g, KI)
        assert all(e.source != e.target for e in p.edges)
        assert G.is_connected(p) == G.is_connected(g)


def test_json_export_schema():
    KS = K.project_by_toral(build("A2"), [(1, 0, -1)])
    d = json.loads(G.to_json(G.fiber_graph(KS, (-1,))))
    assert d["connected"] is False
    assert d["vertices"] == [["-1/1", "1/1", "0/1"], ["0/1", "-1/1", "1/1"]]
    assert d["edges"] == []


@pytest.mark.parametrize(
    "argv,golden",
    [
        (["graph", "--algebra", "G3", "--base", "0", "--collapse", "0", "--fiber", "1,0"], "g3_base0_collapse0_fiber_1_0.dot"),
        (["graph", "--algebra", "A2", "--toral", "(1,0,-1)", "--fiber", "1"], "sl3_toral_fiber_1.dot"),
    ],
)
def test_dot_is_byte_stable(argv, golden, capsys):
    outputs = []
    for _ in range(2):
        assert main(argv) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1] == (GOLDEN / golden).read_text()

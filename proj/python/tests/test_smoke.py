from pathlib import Path

import pytest

import lplanar

SAMPLES = Path(__file__).resolve().parents[2] / "data" / "samples"


def sample(name):
    return (SAMPLES / name).read_text()


def test_diamond_is_bitonic_and_drawable():
    g = lplanar.parse_graph(sample("diamond.dg"))
    r = lplanar.check_bitonic(g)
    assert r["accepted"]
    ranks = r["rank"]
    assert sorted(ranks.values()) == list(range(1, g.num_vertices + 1))
    for u, v in g.edges():
        assert ranks[g.label(u)] < ranks[g.label(v)]
    pos = lplanar.draw(g)
    assert set(pos) == {g.label(v) for v in range(g.num_vertices)}
    for u, v in g.edges():
        assert pos[g.label(u)][1] < pos[g.label(v)][1]
    assert "<svg" in lplanar.render_svg(g, pos)


def test_wheel_needs_six_modality():
    g = lplanar.parse_graph(sample("wheel6-alt.dg"))
    assert lplanar.min_modality(g) == 6


def test_built_graph_and_round_trip():
    g = lplanar.DirectedGraph(3, "path")
    g.add_edge(0, 1)
    g.add_edge(1, 2)
    g.add_edge(0, 2)
    back = lplanar.parse_graph(lplanar.write_graph(g))
    assert back.num_edges == 3
    assert lplanar.check_monotone(back)["accepted"]
    assert lplanar.draw(back, monotone=True) is not None


def test_ports():
    g = lplanar.parse_graph(sample("diamond.dg"))
    emb = sample("diamond.emb")
    assert lplanar.check_ports(g, emb, sample("diamond.labels"))["feasible"]
    bad = lplanar.check_ports(g, emb, sample("diamond-bad.labels"))
    assert not bad["feasible"]
    assert bad["message"]


def test_reduction_sizes():
    graph_text, roles = lplanar.reduce_hv(sample("rect.hv"))
    g = lplanar.parse_graph(graph_text)
    assert (g.num_vertices, g.num_edges) == (32, 96)
    assert roles.startswith("roles")


def test_parse_error():
    with pytest.raises(lplanar.ParseError):
        lplanar.parse_graph("this is not a graph\n")
    assert issubclass(lplanar.ParseError, ValueError)


def test_cli_in_process():
    code, out, _ = lplanar.run_cli(["check-bitonic", "-"], sample("diamond.dg"))
    assert code == 0
    assert out.strip()
    code, _, err = lplanar.run_cli(["check-bitonic", "/nonexistent.dg"])
    assert code == 2 and "error" in err

"""graph6 codec, edge-list parsing, and report emission."""

import json
import random

import pytest

from qblock.analyze import analyze_graph
from qblock.families import bull_graph, complete_graph, path_graph
from qblock.formats import (
    EdgeListError,
    Graph6Error,
    decode_graph6,
    emit_report,
    encode_graph6,
    parse_edge_list,
    report_to_dict,
)
from qblock.graphs import GraphError, build_graph


def test_known_codewords():
    assert encode_graph6(complete_graph(1)) == "@"
    assert decode_graph6("@") == complete_graph(1)
    assert decode_graph6("A_") == build_graph(2, [(0, 1)])
    assert encode_graph6(build_graph(2, [(0, 1)])) == "A_"
    assert decode_graph6("A?") == build_graph(2, [])
    assert encode_graph6(build_graph(2, [])) == "A?"
    assert decode_graph6("?").n == 0


def test_d_question_brace_is_a_star():
    # hand-decoded per the format definition and cross-checked below vs networkx
    g = decode_graph6("D?{")
    assert g.n == 5
    assert g.sorted_edges() == [(0, 4), (1, 4), (2, 4), (3, 4)]


def test_roundtrip_exhaustive_small(all_graphs_upto6):
    for g in all_graphs_upto6:
        assert decode_graph6(encode_graph6(g)) == g


def test_roundtrip_random_up_to_30():
    rng = random.Random(9)
    for _ in range(500):
        n = rng.randint(0, 30)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3
        ]
        g = build_graph(n, edges)
        assert decode_graph6(encode_graph6(g)) == g


def test_long_header_roundtrip():
    g = build_graph(70, [(0, 69), (3, 5)])
    line = encode_graph6(g)
    assert line.startswith(chr(126))
    assert decode_graph6(line) == g


def test_networkx_cross_check():
    nx = pytest.importorskip("networkx")
    rng = random.Random(13)
    for _ in range(200):
        n = rng.randint(0, 25)
        edges = [
            (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3
        ]
        g = build_graph(n, edges)
        line = encode_graph6(g)
        theirs = nx.from_graph6_bytes(line.encode())
        assert {tuple(sorted(e)) for e in theirs.edges} == set(g.edges)
        back = nx.to_graph6_bytes(theirs, header=False).strip().decode()
        assert decode_graph6(back) == g


@pytest.mark.parametrize(
    "line",
    [
        "",  # no header
        "A",  # truncated body
        "Cx~",  # overlong body
        "A" + chr(62),  # byte below range
        "A" + chr(127),  # byte above range
        chr(126) + "??",  # truncated long header
        chr(126) + chr(126) + "??????",  # huge variant rejected
        chr(126) + "??" + chr(63 + 1),  # long header for n < 63
        "A" + chr(63 + 16),  # nonzero padding bits
        "D?" + chr(63 + 1),  # n=5: lowest bit of the second body byte is padding
    ],
)
def test_malformed_rejection(line):
    with pytest.raises(Graph6Error):
        decode_graph6(line)


def test_encode_rejects_oversize():
    class FakeGraph:
        n = 258048
        edges = frozenset()

    with pytest.raises(Graph6Error):
        encode_graph6(FakeGraph())


def test_parse_edge_list():
    assert parse_edge_list("3\n0 1\n1 2") == path_graph(3)
    assert parse_edge_list("2\n# empty") == build_graph(2, [])
    assert parse_edge_list("4  0 1  2 3 # trailing comment").m == 2


def test_parse_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("2\n0 2")
    with pytest.raises(EdgeListError):
        parse_edge_list("")
    with pytest.raises(EdgeListError):
        parse_edge_list("3\n0")
    with pytest.raises(EdgeListError):
        parse_edge_list("3\n0 x")


def test_report_determinism_and_content():
    bull = bull_graph()
    first = emit_report(analyze_graph(bull, "bull"))
    second = emit_report(analyze_graph(bull, "bull"))
    assert first == second  # byte identical
    data = json.loads(first)
    assert data["schema"] == 1
    assert data["n"] == 5 and data["m"] == 5
    assert data["is_block_graph"] is True
    assert data["aut_order"] == 2
    assert data["has_quantum_symmetry"] is False


def test_report_k1():
    data = json.loads(emit_report(analyze_graph(complete_graph(1), "k1")))
    assert data["n"] == 1
    assert data["hyperbolicity"] == 0
    assert data["is_block_graph"] is True
    assert data["aut_order"] == 1
    assert data["is_quantum_asymmetric"] is True


def test_report_every_field_present():
    data = report_to_dict(analyze_graph(path_graph(2), "x"))
    expected = {
        "schema", "input", "class", "n", "m", "connected", "hyperbolicity",
        "per_component", "is_block_graph", "is_block_cograph", "blocks",
        "cut_vertices", "centre", "anchor", "decomposition", "aut_expr",
        "qaut_expr", "aut_order", "has_quantum_symmetry",
        "is_quantum_asymmetric", "canonical_code",
    }
    assert set(data) == expected

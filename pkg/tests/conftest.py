"""Shared corpora, built once per session."""

from __future__ import annotations

import pytest

from qblock.blocks import is_block_graph
from qblock.cographs import is_block_cograph
from qblock.graphs import Graph, is_connected
from qblock.oracle import (
    enumerate_labeled_graphs,
    random_block_cograph,
    random_block_graph,
)


@pytest.fixture(scope="session")
def all_graphs_upto6() -> list[Graph]:
    """Every labeled graph on 0..6 vertices (33,868 graphs)."""
    out = []
    for n in range(7):
        out.extend(enumerate_labeled_graphs(n))
    return out


@pytest.fixture(scope="session")
def connected_block_graphs_upto6(all_graphs_upto6) -> list[Graph]:
    return [
        g
        for g in all_graphs_upto6
        if g.n >= 1 and g.m >= g.n - 1 and is_connected(g) and is_block_graph(g)
    ]


@pytest.fixture(scope="session")
def random_block_graphs_500() -> list[Graph]:
    """500 seeded connected block graphs on at most 9 vertices."""
    corpus = [random_block_graph(1 + i % 6, 1000 + i) for i in range(500)]
    assert all(g.n <= 9 for g in corpus)
    return corpus


@pytest.fixture(scope="session")
def block_graph_corpus(connected_block_graphs_upto6, random_block_graphs_500):
    return connected_block_graphs_upto6 + random_block_graphs_500


@pytest.fixture(scope="session")
def block_cographs_upto6(all_graphs_upto6) -> list[Graph]:
    return [g for g in all_graphs_upto6 if is_block_cograph(g)]


@pytest.fixture(scope="session")
def random_block_cographs_300() -> list[Graph]:
    """300 seeded random cotree graphs on at most 9 vertices."""
    corpus = [random_block_cograph(9, 50000 + i) for i in range(300)]
    assert all(g.n <= 9 for g in corpus)
    return corpus

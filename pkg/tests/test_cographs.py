"""Block-cograph recognition, cotrees, codes and group expressions."""

import random

import pytest

from qblock.cographs import (
    canonical_code_cograph,
    cotree_decompose,
    expr_block_cograph,
    is_block_cograph,
)
from qblock.families import (
    bull_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    star_graph,
)
from qblock.graphs import build_graph, complement, disjoint_union, relabel
from qblock.groups import (
    UnsupportedClassError,
    classical_order,
    normalize_expr,
    sym,
    wreath,
)
from qblock.oracle import (
    enumerate_automorphisms,
    is_isomorphic_bruteforce,
    random_block_cograph,
    random_block_graph,
    schmidt_bruteforce,
)


def test_c4_shape():
    node = cotree_decompose(cycle_graph(4))
    assert node is not None
    # C4 is co-disconnected: complement then union of two K2 cotrees
    assert node.kind == "complement"
    assert node.children[0].kind == "union"
    assert len(node.children[0].children) == 2


def test_bull_is_a_leaf():
    node = cotree_decompose(bull_graph())
    assert node.kind == "leaf" and node.tag == "block-graph"


def test_c5_not_in_class():
    assert cotree_decompose(cycle_graph(5)) is None
    assert not is_block_cograph(cycle_graph(5))
    # complement of C5 is again a 5-cycle
    assert is_isomorphic_bruteforce(cycle_graph(5), complement(cycle_graph(5)))


def test_block_graphs_are_block_cographs():
    for i in range(30):
        g = random_block_graph(1 + i % 6, 2500 + i)
        assert is_block_cograph(g)


def test_expr_c4():
    e = expr_block_cograph(cycle_graph(4))
    assert e == normalize_expr(wreath(sym(2), 2))
    assert classical_order(e) == 8


def test_expr_3k2():
    g, _ = disjoint_union([complete_graph(2)] * 3)
    e = expr_block_cograph(g)
    assert e == normalize_expr(wreath(sym(2), 3))
    assert classical_order(e) == 48


def test_expr_bull():
    assert expr_block_cograph(bull_graph()) == sym(2)


def test_expr_complement_invariance():
    graphs = [
        cycle_graph(4),
        bull_graph(),
        star_graph(4),
        path_graph(4),
        disjoint_union([complete_graph(3), complete_graph(2)])[0],
    ] + [random_block_cograph(8, 3000 + i) for i in range(40)]
    for g in graphs:
        assert expr_block_cograph(g) == expr_block_cograph(complement(g))


def test_expr_not_in_class_is_error():
    with pytest.raises(UnsupportedClassError):
        expr_block_cograph(cycle_graph(5))
    with pytest.raises(UnsupportedClassError):
        canonical_code_cograph(cycle_graph(5))


def test_code_relabel_invariance():
    rng = random.Random(41)
    for i in range(40):
        g = random_block_cograph(8, 4000 + i)
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_code_cograph(g) == canonical_code_cograph(relabel(g, perm))


def test_bull_and_complement_share_code():
    bull = bull_graph()
    assert canonical_code_cograph(bull) == canonical_code_cograph(complement(bull))


def test_codes_partition_exhaustive_corpus_into_iso_classes():
    # all 1087 labeled block-cographs on 1..5 vertices fall into 51 classes,
    # sound and complete against the brute-force oracle
    from collections import defaultdict

    from qblock.oracle import enumerate_labeled_graphs

    groups = defaultdict(list)
    for n in range(1, 6):
        for g in enumerate_labeled_graphs(n):
            if is_block_cograph(g):
                groups[canonical_code_cograph(g)].append(g)
    assert sum(len(m) for m in groups.values()) == 1087
    assert len(groups) == 51
    for code, members in groups.items():
        rep = members[0]
        for other in members[1:]:
            assert is_isomorphic_bruteforce(rep, other), code
    by_invariant = defaultdict(list)
    for members in groups.values():
        g = members[0]
        key = (g.n, g.m, tuple(sorted(g.degree(v) for v in range(g.n))))
        by_invariant[key].append(g)
    for bucket in by_invariant.values():
        for i in range(len(bucket)):
            for j in range(i + 1, len(bucket)):
                assert not is_isomorphic_bruteforce(bucket[i], bucket[j])


def test_code_agrees_with_bruteforce():
    for i in range(80):
        g = random_block_cograph(7, 5000 + i)
        h = random_block_cograph(7, 5500 + i)
        same = canonical_code_cograph(g) == canonical_code_cograph(h)
        assert same == is_isomorphic_bruteforce(g, h)


def test_order_and_schmidt_agree_with_oracle():
    from qblock.groups import is_commutative_quantum

    for i in range(50):
        g = random_block_cograph(8, 6000 + i)
        e = expr_block_cograph(g)
        assert classical_order(e) == enumerate_automorphisms(g).order
        assert (not is_commutative_quantum(e)) == schmidt_bruteforce(g)


def test_block_graph_route_and_cograph_route_agree():
    # a block graph is also a block-cograph; both expression routes must
    # describe the same group
    from qblock.groups import block_graph_expr, is_commutative_quantum

    for i in range(60):
        g = random_block_graph(1 + i % 6, 6800 + i)
        via_blocks = block_graph_expr(g)
        via_cotree = expr_block_cograph(g)
        assert classical_order(via_blocks) == classical_order(via_cotree)
        assert is_commutative_quantum(via_blocks) == is_commutative_quantum(via_cotree)


def test_cotree_of_k2_descends_through_complement():
    # K2 is co-disconnected, so it is not a base leaf
    node = cotree_decompose(complete_graph(2))
    assert node.kind == "complement"
    assert node.children[0].kind == "union"
    leaves = node.children[0].children
    assert all(leaf.kind == "leaf" and leaf.size == 1 for leaf in leaves)


def test_union_children_are_not_unions():
    g, _ = disjoint_union([complete_graph(2), complete_graph(2), complete_graph(1)])
    node = cotree_decompose(g)
    assert node.kind == "union"
    assert len(node.children) == 3
    assert all(c.kind != "union" for c in node.children)


def test_leaf_invariants_hold_everywhere():
    from qblock.blocks import is_block_graph
    from qblock.graphs import is_connected

    def walk(node):
        if node.kind == "leaf":
            g = node.graph
            assert is_connected(g) and is_connected(complement(g))
            assert is_block_graph(g) or is_block_graph(complement(g))
        if node.kind == "complement":
            assert node.children[0].kind == "union"
        if node.kind == "union":
            assert len(node.children) >= 2
            assert all(c.kind != "union" for c in node.children)
        for c in node.children:
            walk(c)

    for i in range(40):
        node = cotree_decompose(random_block_cograph(9, 6500 + i))
        assert node is not None
        walk(node)

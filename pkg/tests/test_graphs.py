"""Web/antiweb construction, cliques, stable sets, odd holes, perfection."""

import time
from itertools import combinations

import pytest

from webrank.graphs import (
    AntiwebId,
    ConstructedHole,
    Graph,
    SearchTimeout,
    WebId,
    alpha,
    alpha_induced,
    antiweb,
    complement,
    complete_graph,
    complete_join,
    construct_odd_hole_avoiding,
    cyclic_relabel_isomorphic,
    delete_nodes,
    edgeless_graph,
    enumerate_maximal_cliques,
    enumerate_stable_sets,
    find_induced_odd_hole,
    from_dimacs,
    from_json_dict,
    has_induced_embedding,
    is_odd_hole,
    is_perfect,
    is_subweb,
    mod1,
    omega,
    parse_graph_spec,
    to_dimacs,
    to_json_dict,
    web,
)


def test_web_5_1_is_the_5_cycle():
    g = web(5, 1)
    assert sorted(g.edges()) == [(1, 2), (1, 5), (2, 3), (3, 4), (4, 5)]


def test_web_8_2_degrees_and_clique_number():
    g = web(8, 2)
    assert all(g.degree(v) == 4 for v in g.nodes)
    assert omega(g) == 3


def test_web_6_2_complement_is_perfect_matching():
    # oracle: enumerate the non-edges, i.e. pairs at circular distance 3
    g = web(6, 2)
    non_edges = [(u, v) for u, v in combinations(g.nodes, 2) if not g.has_edge(u, v)]
    assert non_edges == [(1, 4), (2, 5), (3, 6)]


def test_web_bound_rejected_with_diagnostic():
    with pytest.raises(ValueError, match=r"2\(k\+1\)"):
        web(7, 3)
    with pytest.raises(ValueError):
        WebId(5, 2)


def test_antiweb_5_2_is_self_complementary_c5():
    assert cyclic_relabel_isomorphic(antiweb(5, 2), web(5, 1))


def test_antiweb_7_2_is_an_odd_antihole():
    a = antiweb(7, 2)
    assert a == complement(web(7, 1))
    assert not is_perfect(a)


def test_antiweb_8_3_alpha_and_omega_by_enumeration():
    a = antiweb(8, 3)
    assert alpha(a) == 3
    assert omega(a) == 8 // 3 == 2


def test_antiweb_bounds():
    with pytest.raises(ValueError):
        antiweb(5, 3)
    with pytest.raises(ValueError):
        AntiwebId(6, 1)
    assert AntiwebId(7, 2).prime
    assert not AntiwebId(8, 2).prime


def test_complement_is_involutive():
    g = web(8, 2)
    assert complement(complement(g)) == g


def test_complement_of_c5_is_c5_up_to_cyclic_relabel():
    assert cyclic_relabel_isomorphic(complement(web(5, 1)), web(5, 1))


def test_complement_of_complete_graph_is_edgeless():
    c = complement(complete_graph(4))
    assert c.edge_count() == 0


def test_delete_consecutive_nodes_of_web_gives_perfect_graph():
    # deleting k consecutive nodes of W_n^k leaves a perfect graph
    assert is_perfect(delete_nodes(web(8, 2), (1, 2)))
    assert is_perfect(delete_nodes(web(11, 3), (1, 2, 3)))


def test_delete_nothing_is_identity():
    g = web(8, 2)
    assert delete_nodes(g, ()) == g


def test_delete_one_node_of_w9_2_leaves_an_odd_hole():
    hole = find_induced_odd_hole(delete_nodes(web(9, 2), (1,)))
    assert hole is not None and len(hole) % 2 == 1


def test_delete_unknown_label_rejected():
    with pytest.raises(ValueError, match="unknown"):
        delete_nodes(web(6, 2), (9,))


def test_join_degrees_and_blocks():
    j = complete_join(web(5, 1), web(5, 1))
    assert all(j.degree(v) == 7 for v in j.nodes)
    assert j.blocks == ((1, 2, 3, 4, 5), (6, 7, 8, 9, 10))


def test_join_with_k1_adds_universal_node():
    j = complete_join(complete_graph(1), web(5, 1))
    u = 1
    assert j.degree(u) == 5


def test_alpha_of_join_is_max_of_blocks():
    j = complete_join(web(5, 1), web(5, 1))
    assert alpha(j) == 2 == max(alpha(web(5, 1)), alpha(web(5, 1)))


def test_join_complement_is_disjoint_union_of_complements():
    g1, g2 = web(5, 1), complete_graph(3)
    j = complete_join(g1, g2)
    cj = complement(j)
    for u in range(1, 6):
        for v in range(6, 9):
            assert not cj.has_edge(u, v)
    assert cj.edge_count() == complement(g1).edge_count() + complement(g2).edge_count()


# ---------------------------------------------------------------------------
# subwebs

def test_subweb_remark_instance():
    # the subweb behind "A_17^3 is a subantiweb of A_25^4"
    assert is_subweb(WebId(17, 2), WebId(25, 3))


def test_subweb_is_reflexive():
    assert is_subweb(WebId(10, 3), WebId(10, 3))


def test_subweb_instance_from_the_n_rank_lower_bound_construction():
    # k=4, s=3, r=2: W_{n'}^{k'} with k'=k-t, n'=(s-1)(k'+1)+k' sits inside W_17^4
    k, s, r = 4, 3, 2
    n = s * (k + 1) + r
    t = -((-k * (1 + r)) // (r + s))  # ceil
    kp = k - t
    np_ = (s - 1) * (kp + 1) + kp
    assert t == 3 and (np_, kp) == (5, 1)
    assert is_subweb(WebId(np_, kp), WebId(n, k))


def test_subweb_formula_agrees_with_induced_embedding_search():
    ids = [WebId(n, k) for n in range(4, 13) for k in range(1, n // 2)
           if n >= 2 * (k + 1)]
    for outer in ids:
        og = web(outer.n, outer.k)
        for inner in ids:
            if inner.n > outer.n:
                continue
            formula = is_subweb(inner, outer)
            oracle = has_induced_embedding(web(inner.n, inner.k), og)
            assert formula == oracle, (inner, outer)


# ---------------------------------------------------------------------------
# cliques and stable sets

def test_maximal_cliques_of_webs_are_the_windows():
    g = web(8, 2)
    cliques = enumerate_maximal_cliques(g)
    expected = sorted(tuple(sorted(mod1(i + d, 8) for d in range(3)))
                      for i in range(1, 9))
    assert cliques == expected
    assert omega(g) == 3


def test_maximal_cliques_of_edgeless_graph_are_singletons():
    assert enumerate_maximal_cliques(edgeless_graph(4)) == [(1,), (2,), (3,), (4,)]


def test_antiweb_25_4_clique_number():
    assert omega(antiweb(25, 4)) == 25 // 4 == 6


def test_web_alpha_omega_formulas_by_enumeration():
    for n in range(4, 21):
        for k in range(1, n // 2):
            if n < 2 * (k + 1):
                continue
            g = web(n, k)
            assert omega(g) == k + 1, (n, k)
            assert alpha(g, bound=20) == n // (k + 1), (n, k)


def test_alpha_examples():
    assert alpha(web(8, 2)) == 2
    assert alpha(complete_graph(6)) == 1
    assert alpha_induced(web(9, 2), (1, 3, 5, 6, 7, 8)) == 2


def test_stable_set_enumeration_counts():
    assert len(enumerate_stable_sets(web(5, 1))) == 11
    assert () in enumerate_stable_sets(complete_graph(3))


# ---------------------------------------------------------------------------
# odd holes and perfection

def test_c5_is_its_own_odd_hole():
    assert find_induced_odd_hole(web(5, 1)) == (1, 2, 3, 4, 5)


def test_w6_2_has_no_odd_hole_and_is_perfect():
    assert find_induced_odd_hole(web(6, 2)) is None
    assert is_perfect(web(6, 2))


def test_deleting_one_node_of_w11_2_leaves_an_odd_hole():
    hole = find_induced_odd_hole(delete_nodes(web(11, 2), (1,)))
    assert hole is not None


def test_perfection_of_bipartite_complement_case():
    # delete s consecutive nodes from W_{2(k+1)+s}^k (k=3, s=2)
    g = delete_nodes(web(10, 3), (1, 2))
    assert is_perfect(g)
    assert not is_perfect(web(7, 2))
    assert is_perfect(web(8, 1))


def test_perfection_is_self_complementary_on_small_catalog():
    cat = [web(6, 2), web(7, 2), web(8, 2), web(8, 3), web(9, 2),
           complete_graph(5), edgeless_graph(5),
           complete_join(web(5, 1), complete_graph(2))]
    for g in cat:
        assert is_perfect(g) == is_perfect(complement(g))


def test_odd_hole_search_deadline():
    with pytest.raises(SearchTimeout):
        find_induced_odd_hole(web(14, 2), deadline=time.monotonic() - 1)


def test_is_odd_hole_recheck_rejects_chords_and_even_cycles():
    g = web(8, 2)
    assert not is_odd_hole(g, (1, 2, 3, 4, 5))       # chords everywhere
    assert not is_odd_hole(web(6, 1), (1, 2, 3, 4, 5, 6))  # even


# ---------------------------------------------------------------------------
# the constructive odd-hole claim

def test_construct_odd_hole_small_examples():
    res = construct_odd_hole_avoiding(WebId(8, 2), (1,))
    assert 1 not in res.nodes and len(res.nodes) in (5, 7)
    res = construct_odd_hole_avoiding(WebId(11, 3), (1, 2))
    assert not {1, 2} & set(res.nodes) and len(res.nodes) % 2 == 1


def test_construct_odd_hole_postcondition_everywhere_small():
    for k in (2, 3):
        for n in range(3 * k + 2, 13):
            g = web(n, k)
            for f in combinations(range(1, n + 1), k - 1):
                res = construct_odd_hole_avoiding(WebId(n, k), f)
                assert isinstance(res, ConstructedHole)
                assert not set(res.nodes) & set(f)
                assert is_odd_hole(g, res.nodes)


def test_construct_odd_hole_case_b_instance():
    # every L_i meets this F, so the second branch of the case analysis
    # must produce the hole (frozen instance found by search)
    f = (1, 3, 6, 11, 16, 21)
    res = construct_odd_hole_avoiding(WebId(23, 7), f)
    assert res.method == "constructive-b"
    assert not set(res.nodes) & set(f)
    assert is_odd_hole(web(23, 7), res.nodes)


def test_construct_odd_hole_hypothesis_errors():
    with pytest.raises(ValueError, match="3k\\+2"):
        construct_odd_hole_avoiding(WebId(7, 2), (1,))
    with pytest.raises(ValueError, match="k-1"):
        construct_odd_hole_avoiding(WebId(9, 2), (1, 2))


# ---------------------------------------------------------------------------
# I/O

def test_dimacs_round_trip():
    g = web(8, 2)
    assert from_dimacs(to_dimacs(g)) == Graph(g.nodes, g.edges())


def test_json_round_trip_keeps_family_and_blocks():
    j = complete_join(antiweb(5, 2), complete_graph(3))
    back = from_json_dict(to_json_dict(j))
    assert back == j and back.blocks == j.blocks


def test_parse_graph_spec_forms():
    assert parse_graph_spec("W:8:2").edge_count() == 16
    assert parse_graph_spec("A:5:2").edge_count() == 5
    assert parse_graph_spec("K:4").edge_count() == 6
    assert parse_graph_spec("C:5") == web(5, 1)
    j = parse_graph_spec("join:A:5:2,A:5:2")
    assert j.n == 10 and j.block_tags == ("A:5:2", "A:5:2")
    with pytest.raises(ValueError):
        parse_graph_spec("X:3")
    with pytest.raises(ValueError):
        parse_graph_spec("W:7:3")  # web bound violation via spec string

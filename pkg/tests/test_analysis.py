"""Analysis layer: every closed form against its brute-force counterpart."""

import math

import networkx as nx
import pytest

from conftest import brute_degrees, pairwise_edges
from kpower import numth
from kpower.analysis import (
    CyclicExtras,
    TheoremViolation,
    adjacency_preserves_order,
    analyze,
    chromatic,
    clique_number,
    component_count_cyclic,
    degree_cyclic,
    edge_count_formula,
    is_connected_criterion,
    is_connected_cyclic_pi,
    is_empty_graph,
    is_forest,
    is_perfect,
    is_star,
    min_covering_exponent,
    shapes_all_basic_criterion,
    theorem16_structure,
)
from kpower.graphs import build_undirected, components, diameter
from kpower.groups import build_group

S3 = build_group("sym:3")
Z4 = build_group("cyclic:4")
Z31 = build_group("cyclic:31")
Q8 = build_group("quaternion:2")


class TestEdgeCountFormula:
    def test_s3_fixture_values(self):
        assert edge_count_formula(S3, 2) == 4
        assert edge_count_formula(S3, 3) == 2
        assert edge_count_formula(S3, 4) == 3
        assert edge_count_formula(S3, 5) == 1

    def test_matches_brute_force_small_corpus(self):
        for spec in ("cyclic:1", "cyclic:60", "sym:4", "dihedral:10", "quaternion:4", "product:4x6"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                assert edge_count_formula(g, k) == len(pairwise_edges(g, k)), (spec, k)

    def test_cyclic_phi_variant(self):
        # for cyclic groups the census sums collapse: |E| = n - k1 - (k2 - k1)/2
        for n in (1, 2, 12, 31, 36, 100):
            g = build_group(f"cyclic:{n}")
            for k in range(2, n + 2):
                k1 = math.gcd(k - 1, n)
                k2 = math.gcd(k * k - 1, n)
                assert edge_count_formula(g, k) == n - k1 - (k2 - k1) // 2


class TestDegreeCyclic:
    def test_fixture_values(self):
        assert degree_cyclic(4, 2, 2) == 3
        assert degree_cyclic(4, 2, 0) == 1
        assert degree_cyclic(31, 2, 0) == 0

    def test_mutual_edge_case(self):
        # 1 and 2 swap under squaring mod 3: the out-edge is also the in-edge
        assert degree_cyclic(3, 2, 1) == 1

    def test_matches_brute_force(self):
        for n in range(1, 65):
            g = build_group(f"cyclic:{n}")
            for k in range(2, n + 2):
                brute = brute_degrees(g, k)
                for a in range(n):
                    assert degree_cyclic(n, k, a) == brute[a], (n, k, a)

    def test_bounded_by_gcd_plus_one(self):
        for n in (12, 36, 60):
            for k in range(2, n + 2):
                d = math.gcd(n, k)
                assert max(degree_cyclic(n, k, a) for a in range(n)) <= d + 1


class TestConnectivity:
    def test_z4_connected_with_bound(self):
        connected, bound = is_connected_criterion(Z4, 2)
        assert connected
        assert bound >= diameter(build_undirected(Z4, 2)) == 2

    def test_z31_disconnected(self):
        assert is_connected_criterion(Z31, 2) == (False, None)

    def test_z8_bound_is_six(self):
        g = build_group("cyclic:8")
        assert is_connected_criterion(g, 2) == (True, 6)

    def test_min_covering_exponent(self):
        assert min_covering_exponent(1, 5) == 0
        assert min_covering_exponent(8, 2) == 3
        assert min_covering_exponent(12, 6) == 2  # 12 | 36
        assert min_covering_exponent(31, 2) is None

    def test_pi_criterion(self):
        assert is_connected_cyclic_pi(4, 2)
        assert not is_connected_cyclic_pi(31, 2)
        assert is_connected_cyclic_pi(12, 6)

    def test_criterion_matches_bfs_and_trees(self):
        for spec in ("cyclic:36", "sym:4", "dihedral:8", "quaternion:3"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                gr = build_undirected(g, k)
                connected = len(components(gr)) == 1
                criterion, bound = is_connected_criterion(g, k)
                assert criterion == connected, (spec, k)
                if connected:
                    assert gr.edge_count == g.order - 1  # connected implies tree
                    assert diameter(gr) <= bound


class TestClique:
    def test_z7_k2_triangle(self):
        g = build_group("cyclic:7")
        assert clique_number(build_undirected(g, 2), g, 2) == (3, True)

    def test_s3_k2_no_triangle(self):
        assert clique_number(build_undirected(S3, 2), S3, 2) == (2, False)

    def test_empty_graph_omega_one(self):
        g = build_group("cyclic:6")
        assert clique_number(build_undirected(g, 7), g, 7) == (1, False)

    def test_criterion_iff_triangle_small_corpus(self):
        for spec in ("cyclic:63", "sym:4", "dihedral:12", "product:3x7"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                gr = build_undirected(g, k)
                omega, criterion = clique_number(gr, g, k)
                assert omega <= 3
                assert (omega == 3) == criterion, (spec, k)
                # cross-check omega against networkx's clique finder
                if g.order <= 64:
                    h = nx.Graph(gr.edges())
                    h.add_nodes_from(range(g.order))
                    assert omega == max(len(c) for c in nx.find_cliques(h)), (spec, k)


class TestChromatic:
    def test_z31_k2_needs_three(self):
        chi, _ = chromatic(build_undirected(Z31, 2))
        assert chi == 3

    def test_s3_k2_bipartite(self):
        chi, _ = chromatic(build_undirected(S3, 2))
        assert chi == 2

    def test_empty_graph_one_colour(self):
        g = build_group("cyclic:6")
        assert chromatic(build_undirected(g, 7))[0] == 1

    def test_coloring_proper_and_tight(self):
        for spec in ("cyclic:100", "sym:4", "quaternion:5", "product:5x5"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                gr = build_undirected(g, k)
                chi, colors = chromatic(gr)
                assert chi <= 3
                assert all(colors[u] != colors[v] for u, v in gr.edges())
                assert sorted(set(colors)) == list(range(1, chi + 1))
                # bipartiteness agrees with networkx
                if g.order <= 100:
                    h = nx.Graph(gr.edges())
                    h.add_nodes_from(range(g.order))
                    assert (chi <= 2) == nx.is_bipartite(h), (spec, k)


def perfect_oracle(gr) -> bool:
    """Independent perfect-graph check via networkx.

    Verifies the pseudoforest property, then scans every basis cycle as a
    candidate odd hole (in a pseudoforest every cycle is chordless and
    component-unique).  Odd antiholes need at least C(7,2)/... more edges
    than a pseudoforest subgraph can carry, except length 5 where the
    antihole IS a 5-hole, so the hole scan is complete.
    """
    h = nx.Graph(gr.edges())
    h.add_nodes_from(range(gr.group_order))
    for comp in nx.connected_components(h):
        sub = h.subgraph(comp)
        assert sub.number_of_edges() <= len(comp), "not a pseudoforest"
    for cycle in nx.cycle_basis(h):
        if len(cycle) >= 5 and len(cycle) % 2 == 1:
            # chordless check: consecutive pairs are the only adjacencies
            chords = sum(1 for i in range(len(cycle)) for j in range(i + 2, len(cycle))
                         if h.has_edge(cycle[i], cycle[j]) and not (i == 0 and j == len(cycle) - 1))
            assert chords == 0
            return False
    return True


class TestPerfect:
    def test_z31_k2_imperfect(self):
        assert not is_perfect(build_undirected(Z31, 2))

    def test_z4_k2_perfect(self):
        assert is_perfect(build_undirected(Z4, 2))

    def test_z7_k2_perfect_triangles(self):
        g = build_group("cyclic:7")
        assert is_perfect(build_undirected(g, 2))

    def test_matches_oracle_cyclic_to_64(self):
        for n in range(1, 65):
            g = build_group(f"cyclic:{n}")
            for k in range(2, n + 2):
                gr = build_undirected(g, k)
                assert is_perfect(gr) == perfect_oracle(gr), (n, k)


class TestStar:
    def test_z4_k2(self):
        assert is_star(Z4, 2) == (True, "z4_k2")

    def test_q8_k2_and_k6(self):
        assert is_star(Q8, 2) == (True, "q8_k2_or_6")
        assert is_star(Q8, 6) == (True, "q8_k2_or_6")

    def test_s3_k2_not_star(self):
        assert is_star(S3, 2) == (False, "not_star")

    def test_exponent_annihilates_everything(self):
        assert is_star(S3, 6) == (True, "all_orders_divide_k")
        g = build_group("cyclic:5")
        assert is_star(g, 5) == (True, "all_orders_divide_k")

    def test_single_vertex_is_not_a_star(self):
        g = build_group("cyclic:1")
        assert is_star(g, 2) == (False, "not_star")

    def test_graph_test_iff_case_small_corpus(self):
        for spec in ("cyclic:4", "cyclic:16", "sym:3", "dihedral:4", "quaternion:2", "quaternion:4", "product:2x2"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                star, case = is_star(g, k)
                assert star == (case != "not_star"), (spec, k, case)


class TestEmpty:
    def test_s3_k7(self):
        assert is_empty_graph(S3, 7)

    def test_z4_k2_not_empty(self):
        assert not is_empty_graph(Z4, 2)

    def test_exponent_plus_one(self):
        for spec in ("cyclic:9", "dihedral:5", "sym:4"):
            g = build_group(spec)
            exponent = math.lcm(*g.order_census().keys())
            assert is_empty_graph(g, exponent + 1)

    def test_iff_no_edges(self):
        for spec in ("cyclic:36", "dihedral:9", "quaternion:3"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                assert is_empty_graph(g, k) == (build_undirected(g, k).edge_count == 0)


class TestForest:
    def test_z31_k2_cycles(self):
        assert is_forest(Z31, 2, build_undirected(Z31, 2)) == (False, False)

    def test_z4_k2_tree(self):
        assert is_forest(Z4, 2, build_undirected(Z4, 2)) == (True, True)

    def test_s3_k2_forest(self):
        assert is_forest(S3, 2, build_undirected(S3, 2)) == (True, True)

    def test_iff_on_small_corpus(self):
        for spec in ("cyclic:60", "sym:4", "dihedral:15", "quaternion:6"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                acyclic, criterion = is_forest(g, k)
                assert acyclic == criterion, (spec, k)


class TestComponentCountCyclic:
    def test_primitive_root_case(self):
        assert component_count_cyclic(7, 3) == (2, 2, True)

    def test_z31_k2(self):
        assert component_count_cyclic(31, 2) == (7, 2, False)

    def test_trivial_group(self):
        assert component_count_cyclic(1, 5) == (1, 1, True)

    def test_non_coprime_rejected(self):
        with pytest.raises(ValueError):
            component_count_cyclic(6, 4)

    def test_bound_and_criterion_sweep(self):
        for n in range(1, 80):
            for k in range(2, n + 2):
                if math.gcd(n, k) == 1:
                    count, tau_n, crit = component_count_cyclic(n, k)
                    assert count >= tau_n
                    assert (count == tau_n) == crit


class TestOrderHomogeneity:
    def test_z31_k2(self):
        assert adjacency_preserves_order(build_undirected(Z31, 2), Z31) is True

    def test_z7_k3(self):
        g = build_group("cyclic:7")
        assert adjacency_preserves_order(build_undirected(g, 3), g) is True

    def test_not_applicable_when_not_coprime(self):
        assert adjacency_preserves_order(build_undirected(Z4, 2), Z4) is None

    def test_holds_for_general_groups_too(self):
        for spec in ("sym:4", "dihedral:7", "quaternion:3"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                gr = build_undirected(g, k)
                verdict = adjacency_preserves_order(gr, g)
                assert verdict in (True, None)


class TestHalfExponentStructures:
    def test_n10(self):
        cert = theorem16_structure(10)
        assert cert.star_centers == (0, 5)
        assert cert.star_leaf_count == 4
        assert cert.half_description == "2*K_{1,4}"
        assert cert.matching_pairs == [(0, 5), (1, 6), (2, 7), (3, 8), (4, 9)]
        assert cert.matching_description == "5*P_2"

    def test_n6_smallest(self):
        cert = theorem16_structure(6)
        assert cert.star_leaf_count == 2
        assert len(cert.matching_pairs) == 3

    def test_rejects_wrong_shape_of_n(self):
        for n in (2, 4, 8, 12, 9):
            with pytest.raises(ValueError):
                theorem16_structure(n)

    def test_sweep_to_400(self):
        for n in range(6, 401, 4):
            assert n % 4 == 2
            cert = theorem16_structure(n)
            assert cert.star_leaf_count == n // 2 - 1
            assert len(cert.matching_pairs) == n // 2


class TestShapesCriterion:
    def test_matched_pairs_exception_found_by_scan(self):
        """Exhaustive scan: every-component-basic iff coprime or the
        matched-pairs family (n = 2 mod 4, k = n/2 + 1 mod n)."""
        basic = {"isolated", "k2", "cycle"}
        for n in range(1, 101):
            g = build_group(f"cyclic:{n}")
            for k in range(2, n + 2):
                profiles = components(build_undirected(g, k))
                all_basic = all(p.shape in basic for p in profiles)
                assert all_basic == shapes_all_basic_criterion(n, k), (n, k)

    def test_coprime_always_basic(self):
        for n in (5, 12, 31, 50):
            for k in range(2, n + 2):
                if math.gcd(n, k) == 1:
                    assert shapes_all_basic_criterion(n, k)


class TestAnalyze:
    def test_s3_k2_report(self):
        report = analyze(S3, 2)
        assert report.edges == 4
        assert report.clique_number == 2
        assert report.chromatic_number == 2
        assert report.component_count == 2
        assert report.discrepancies == []
        assert report.cyclic is None

    def test_z31_k2_report(self):
        report = analyze(Z31, 2)
        assert report.component_count == 7
        assert report.chromatic_number == 3
        assert report.clique_number == 2
        assert not report.is_perfect
        assert not report.is_forest
        assert report.cyclic == CyclicExtras(False, 2, False, None)
        assert report.discrepancies == []

    def test_z4_k2_report(self):
        report = analyze(Z4, 2)
        assert report.is_star
        assert report.star_criterion_case == "z4_k2"
        assert report.is_connected
        assert report.is_forest
        assert report.diameter == 2
        assert report.discrepancies == []

    def test_degenerate_single_vertex(self):
        report = analyze(build_group("cyclic:1"), 2)
        assert report.is_connected
        assert report.is_forest
        assert not report.is_star
        assert report.is_empty
        assert report.diameter == 0
        assert report.discrepancies == []

    def test_no_discrepancies_across_families(self):
        for spec in ("cyclic:48", "sym:4", "dihedral:10", "quaternion:4", "product:2x3x5"):
            g = build_group(spec)
            for k in range(2, g.order + 2):
                assert analyze(g, k).discrepancies == [], (spec, k)

    def test_json_round_trip_field_order(self):
        import json

        doc = analyze(S3, 2).to_json_dict()
        keys = list(doc.keys())
        assert keys[:6] == ["group", "k", "k_normalized", "edges", "edge_count_formula", "edge_count_brute"]
        assert keys[-1] == "discrepancies"
        json.dumps(doc)

    def test_csv_row_matches_header_width(self):
        header = len(analyze(S3, 2).CSV_FIELDS.split(","))
        for report in (analyze(S3, 2), analyze(Z31, 2), analyze(Z4, 4)):
            assert len(report.to_csv_row().split(",")) == header

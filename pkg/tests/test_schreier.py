"""Graph construction tests: the block pictures, the two independent gamma
builders, and the Gray code order."""

from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from grigorchuk import (
    Block,
    LabeledGraph,
    Ray,
    apply_generator,
    block_graph,
    build_gamma_orbit,
    build_gamma_recursive,
    delta_block,
    export_dot,
    fixing_generator,
    glue,
    gray_code,
    gray_index,
    parse_dot,
    parse_omega,
    ray_at,
    rho_enumeration,
    ruler_a,
    self_similarity_check,
)
from grigorchuk.omega import OmegaSequence

GOLDEN = Path(__file__).parent / "golden"

omegas = st.builds(
    OmegaSequence, st.text(alphabet="012", max_size=3), st.text(alphabet="012", min_size=1, max_size=4)
)


def _reverse(g: LabeledGraph) -> LabeledGraph:
    relabel = lambda v: g.n - 1 - v
    return LabeledGraph.make(g.n, [(relabel(u), relabel(v), lab) for u, v, lab in g.edges])


class TestBlocks:
    def test_theta(self):
        g = block_graph(Block.THETA)
        assert g.n == 2 and g.edges == ((0, 1, "a"),)

    def test_xi(self):
        g = block_graph(Block.XI)
        assert g.n == 1
        assert g.edges == ((0, 0, "b"), (0, 0, "c"), (0, 0, "d"))

    @pytest.mark.parametrize(
        "block,loop,double",
        [(Block.L0, "d", "bc"), (Block.L1, "c", "bd"), (Block.L2, "b", "cd")],
    )
    def test_lambda_blocks(self, block, loop, double):
        g = block_graph(block)
        assert g.n == 2
        loops = sorted(lab for u, v, lab in g.edges if u == v)
        doubles = sorted(lab for u, v, lab in g.edges if u != v)
        assert loops == [loop, loop]
        assert doubles == sorted(double)


class TestGlue:
    def test_theta_theta(self):
        g = glue(block_graph(Block.THETA), block_graph(Block.THETA))
        assert g.n == 3 and g.edges == ((0, 1, "a"), (1, 2, "a"))

    def test_theta_lambda0(self):
        g = glue(block_graph(Block.THETA), block_graph(Block.L0))
        assert g.n == 3
        assert g.edges == (
            (0, 1, "a"), (1, 1, "d"), (1, 2, "b"), (1, 2, "c"), (2, 2, "d"),
        )

    @given(st.lists(st.sampled_from(list(Block)), min_size=2, max_size=6))
    def test_vertex_count(self, blocks):
        graphs = [block_graph(b) for b in blocks]
        g = graphs[0]
        for h in graphs[1:]:
            expected = g.n + h.n - 1
            g = glue(g, h)
            assert g.n == expected
        assert g.leftmost == 0 and g.rightmost == g.n - 1


class TestGrayCode:
    def test_level_1(self):
        assert gray_code(1).strings == ("1", "0")

    def test_level_2(self):
        assert gray_code(2).strings == ("11", "01", "00", "10")

    def test_level_4_published_listing(self):
        assert gray_code(4).strings == (
            "1111", "0111", "0011", "1011", "1001", "0001", "0101", "1101",
            "1100", "0100", "0000", "1000", "1010", "0010", "0110", "1110",
        )

    @given(st.integers(min_value=1, max_value=10))
    def test_consecutive_strings_differ_in_one_bit(self, level):
        strings = gray_code(level).strings
        assert strings[0] == "1" * level
        assert len(set(strings)) == 1 << level
        for s, t in zip(strings, strings[1:]):
            assert sum(x != y for x, y in zip(s, t)) == 1

    @given(st.integers(min_value=1, max_value=9))
    def test_rank_inverts_enumeration(self, level):
        from grigorchuk.schreier import gray_rank

        assert [gray_rank(s) for s in gray_code(level).strings] == list(range(1 << level))
        # the rank is stable under the trailing-1 padding that defines rays
        for j, s in enumerate(gray_code(level).strings):
            assert gray_index(Ray(s)) == j


class TestRhoEnumeration:
    def test_first_four(self):
        assert [r.prefix for r in rho_enumeration(4)] == ["", "0", "00", "10"]

    def test_single(self):
        assert rho_enumeration(1) == [Ray("")]

    def test_ray_at_matches(self):
        rays = rho_enumeration(64)
        assert [ray_at(i) for i in range(64)] == rays

    def test_moves_alternate(self, omega012):
        rays = rho_enumeration(256)
        for j in range(255):
            cur, nxt = rays[j], rays[j + 1]
            if j % 2 == 0:  # move flips the first digit
                assert apply_generator("a", cur, omega012) == nxt
            else:  # move flips the digit after the first zero
                movers = [g for g in "bcd" if apply_generator(g, cur, omega012) == nxt]
                assert len(movers) == 2


class TestRuler:
    def test_examples(self):
        assert ruler_a(1) == 1
        assert ruler_a(8) == 4
        assert ruler_a(6) == 2

    def test_prefix(self):
        assert [ruler_a(i) for i in range(1, 16)] == [1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1][:15]

    @given(st.integers(min_value=1, max_value=1 << 20))
    def test_matches_dyadic_valuation(self, i):
        assert ruler_a(i) == (i & -i).bit_length()

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            ruler_a(0)


class TestDeltaBlocks:
    def test_examples(self, omega012):
        assert delta_block(omega012, 1) is Block.L0
        assert delta_block(omega012, 2) is Block.L1
        assert delta_block(omega012, 4) is Block.L2

    def test_first_zero_rule(self, omega012):
        # the i-th double edge joins rays whose fixing generator is s_{omega(a_i)}
        rays = rho_enumeration(64)
        for i in range(1, 32):
            left, right = rays[2 * i - 1], rays[2 * i]
            block = delta_block(omega012, i)
            expected_loop = {Block.L0: "d", Block.L1: "c", Block.L2: "b"}[block]
            assert fixing_generator(left, omega012) == expected_loop
            assert fixing_generator(right, omega012) == expected_loop


class TestGammaBuilders:
    def test_level1(self, omega012):
        g = build_gamma_recursive(omega012, 1)
        theta, lam = block_graph(Block.THETA), block_graph(Block.L0)
        assert g == glue(glue(theta, lam), theta)
        assert g.n == 4

    def test_level2_block_sequence(self, omega012):
        blocks = [Block.THETA, Block.L0, Block.THETA, Block.L1, Block.THETA, Block.L0, Block.THETA]
        expected = block_graph(blocks[0])
        for b in blocks[1:]:
            expected = glue(expected, block_graph(b))
        assert build_gamma_recursive(omega012, 2) == expected

    @given(omegas, st.integers(min_value=1, max_value=12))
    def test_vertex_count(self, w, n):
        assert build_gamma_recursive(w, n).n == 1 << (n + 1)

    def test_orbit_equals_recursive(self, suite):
        for w in suite:
            for n in range(1, 11):
                assert build_gamma_recursive(w, n) == build_gamma_orbit(w, 1 << (n + 1), False)

    def test_orbit_prefix_two_vertices(self, omega012):
        g = build_gamma_orbit(omega012, 2, with_xi=True)
        assert g.edges == ((0, 0, "b"), (0, 0, "c"), (0, 0, "d"), (0, 1, "a"))
        assert build_gamma_orbit(omega012, 2, with_xi=False).edges == ((0, 1, "a"),)

    def test_unlabeled_shape(self, omega012):
        # alternating simple edges and double-edges-with-loops along the line
        g = build_gamma_orbit(omega012, 64, with_xi=False)
        plain = {}
        for u, v, lab in g.edges:
            if u != v:
                plain.setdefault((u, v), []).append(lab)
        for (u, v), labs in plain.items():
            assert v == u + 1
            if u % 2 == 0:
                assert labs == ["a"]
            else:
                assert len(labs) == 2 and set(labs) <= set("bcd")

    def test_degree_profile(self, suite):
        for w in suite:
            g = build_gamma_recursive(w, 5)
            loops = {u: 0 for u in range(g.n)}
            simple = {u: 0 for u in range(g.n)}
            double = {u: 0 for u in range(g.n)}
            for u, v, lab in g.edges:
                if u == v:
                    loops[u] += 1
                elif lab == "a":
                    simple[u] += 1
                    simple[v] += 1
                else:
                    double[u] += 1
                    double[v] += 1
            for u in range(1, g.n - 1):
                assert (loops[u], simple[u], double[u]) == (1, 1, 2)
            for u in (0, g.n - 1):
                assert (loops[u], simple[u], double[u]) == (0, 1, 0)

    def test_left_right_symmetry(self, suite):
        for w in suite:
            for n in range(1, 8):
                g = build_gamma_recursive(w, n)
                assert g == _reverse(g)

    def test_loop_labels_match_fixing_generator(self, omega012):
        g = build_gamma_orbit(omega012, 128, with_xi=False)
        rays = rho_enumeration(128)
        for u, v, lab in g.edges:
            if u == v:
                assert fixing_generator(rays[u], omega012) == lab

    def test_bfs_distance_order(self, suite):
        for w in suite:
            g = build_gamma_orbit(w, 256, with_xi=False)
            adjacency = {i: set() for i in range(g.n)}
            for u, v, _ in g.edges:
                adjacency[u].add(v)
                adjacency[v].add(u)
            dist = {0: 0}
            frontier = [0]
            while frontier:
                nxt = []
                for u in frontier:
                    for v in adjacency[u]:
                        if v not in dist:
                            dist[v] = dist[u] + 1
                            nxt.append(v)
                frontier = nxt
            assert all(dist[i] == i for i in range(g.n))


class TestSelfSimilarity:
    def test_base_example(self, omega012):
        assert self_similarity_check(omega012, 1, 1)

    def test_suite(self, suite):
        for w in suite:
            for n in range(1, 7):
                for m in range(1, 7):
                    if n + m <= 10:
                        assert self_similarity_check(w, n, m)

    def test_rejects_n_zero(self, omega012):
        with pytest.raises(ValueError):
            self_similarity_check(omega012, 0, 1)


class TestExport:
    def test_theta_dot(self):
        text = export_dot(block_graph(Block.THETA))
        assert '0 -- 1 [label="a"];' in text
        assert text.count("--") == 1

    def test_lambda2_dot(self):
        text = export_dot(block_graph(Block.L2))
        assert text.count('[label="b"]') == 2  # loops on both vertices
        assert '0 -- 1 [label="c"];' in text
        assert '0 -- 1 [label="d"];' in text

    @given(omegas, st.integers(min_value=1, max_value=6))
    def test_parse_round_trip(self, w, n):
        g = build_gamma_recursive(w, n)
        assert parse_dot(export_dot(g)) == g

    def test_equal_graphs_export_identically(self, omega012):
        a = export_dot(build_gamma_recursive(omega012, 4))
        b = export_dot(build_gamma_orbit(omega012, 32, False))
        assert a == b

    @pytest.mark.parametrize("n", range(1, 7))
    def test_golden_files(self, omega012, n):
        expected = (GOLDEN / f"gamma_012_n{n}.dot").read_text()
        assert export_dot(build_gamma_recursive(omega012, n)) == expected

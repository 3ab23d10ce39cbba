import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tsskit.generators import SplitMix64, ThresholdPolicy, assign_thresholds, gen_block_cactus, gen_chordal
from tsskit.graph import GraphClass, block_cut_tree, classify_graph, connected_components, recognize_chordal
from tsskit.io import serialize_network


class TestSplitMix64:
    def test_reference_vector(self):
        # published first outputs for seed 1234567
        rng = SplitMix64(1234567)
        assert [rng.next() for _ in range(3)] == [
            6457827717110365317,
            3203168211198807973,
            9817491932198370423,
        ]

    def test_seed_zero(self):
        assert SplitMix64(0).next() == 0xE220A8397B1DCDAF

    @given(st.integers(1, 1000), st.integers(0, 2**64 - 1))
    def test_below_range(self, k, seed):
        rng = SplitMix64(seed)
        assert all(0 <= rng.below(k) < k for _ in range(20))

    def test_unit_range(self):
        rng = SplitMix64(9)
        assert all(0.0 <= rng.unit() < 1.0 for _ in range(1000))

    def test_weighted_zero_weight_never_picked(self):
        rng = SplitMix64(5)
        assert 1 not in {rng.weighted([1, 0, 1]) for _ in range(500)}


class TestBlockCactus:
    def test_triangle(self):
        net = gen_block_cactus(SplitMix64(1), 1, 3, 3, 0.0)
        assert net.n == 3 and net.m == 3

    def test_bowtie_shape(self):
        net = gen_block_cactus(SplitMix64(1), 2, 3, 3, 0.0)
        bct = block_cut_tree(net)
        assert net.n == 5 and len(bct.blocks) == 2 and len(bct.cut_vertices) == 1

    def test_deterministic(self):
        a = serialize_network(gen_block_cactus(SplitMix64(77), 6))
        b = serialize_network(gen_block_cactus(SplitMix64(77), 6))
        assert a == b

    def test_bad_params(self):
        with pytest.raises(ValueError):
            gen_block_cactus(SplitMix64(1), 0)
        with pytest.raises(ValueError):
            gen_block_cactus(SplitMix64(1), 2, 4, 3)

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**64 - 1), st.integers(1, 8), st.floats(0, 1))
    def test_is_connected_cactus(self, seed, blocks, frac):
        net = gen_block_cactus(SplitMix64(seed), blocks, 2, 6, frac)
        assert len(connected_components(net)) == 1
        assert classify_graph(net) is GraphClass.BLOCK_CACTUS
        assert all(0 <= t <= net.degree(v) + 1 for v, t in enumerate(net.theta))

    def test_constant_policy(self):
        net = gen_block_cactus(SplitMix64(3), 4, policy=ThresholdPolicy("constant", value=2))
        assert set(net.theta) == {2}

    def test_unknown_policy(self):
        with pytest.raises(ValueError):
            assign_thresholds(SplitMix64(0), [1, 2], ThresholdPolicy("gaussian"))


class TestChordal:
    def test_width_one_is_tree(self):
        net = gen_chordal(SplitMix64(4), 12, width=1)
        assert net.m == net.n - 1

    def test_full_width_is_complete(self):
        n = 7
        net = gen_chordal(SplitMix64(4), n, width=n - 1, min_width=n - 1)
        assert net.m == n * (n - 1) // 2

    @settings(max_examples=150, deadline=None)
    @given(st.integers(0, 2**64 - 1), st.integers(1, 20), st.integers(1, 4))
    def test_always_chordal(self, seed, n, width):
        net = gen_chordal(SplitMix64(seed), n, width=width)
        assert recognize_chordal(net)
        assert len(connected_components(net)) == 1
        assert set(net.theta) <= {0, 1, 2}

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 2**64 - 1), st.integers(3, 14))
    def test_min_width_two_is_biconnected(self, seed, n):
        net = gen_chordal(SplitMix64(seed), n, width=3, min_width=2)
        assert len(block_cut_tree(net).blocks) == 1

    def test_theta_const(self):
        assert set(gen_chordal(SplitMix64(0), 6, theta_const=2).theta) == {2}

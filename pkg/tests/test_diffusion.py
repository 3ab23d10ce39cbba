import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _graphs import complete, cycle, networks_with_seeds, path, star
from tsskit.diffusion import (
    closure,
    closure_sequential,
    is_target_set,
    reduce_cut_threshold,
    reduce_for_removed_vertex,
    spread,
)
from tsskit.errors import GraphInputError
from tsskit.graph import build_network


def naive_closure(net, seeds):
    """Textbook round-by-round simulation, kept deliberately simple."""
    active = set(seeds)
    rounds = {v: 0 for v in active}
    r = 0
    while True:
        r += 1
        new = {
            v for v in range(net.n)
            if v not in active and sum(w in active for w in net.adj[v]) >= net.theta[v]
        }
        if not new:
            return active, rounds
        for v in new:
            rounds[v] = r
        active |= new


class TestClosure:
    def test_path_chain(self):
        res = closure(path(3, 1), {0})
        assert res.active == {0, 1, 2}
        assert dict(res.round_of) == {0: 0, 1: 1, 2: 2}
        assert res.convinced_sequence == (1, 2)
        assert res.rounds == 2

    def test_c4_opposite_seeds(self):
        res = closure(cycle(4, 2), {0, 2})
        assert res.active == {0, 1, 2, 3}
        assert res.round_of[1] == res.round_of[3] == 1

    def test_all_seeds(self):
        net = complete(4, 3)
        res = closure(net, range(4))
        assert res.active == set(range(4))
        assert res.convinced_sequence == ()

    def test_nonpositive_threshold_activates_in_round_one(self):
        net = path(3, [0, 5, -2])
        res = closure(net, set())
        assert res.round_of == {0: 1, 2: 1}

    def test_bad_seed(self):
        with pytest.raises(GraphInputError):
            closure(path(3, 1), {3})

    @settings(max_examples=300, deadline=None)
    @given(networks_with_seeds(max_n=10))
    def test_matches_naive(self, case):
        net, seeds = case
        active, rounds = naive_closure(net, seeds)
        res = closure(net, seeds)
        assert res.active == active
        assert dict(res.round_of) == rounds
        assert set(spread(net.adj, net.theta, seeds)) <= {0, 1}
        assert {v for v, a in enumerate(spread(net.adj, net.theta, seeds)) if a} == active

    @settings(max_examples=200, deadline=None)
    @given(networks_with_seeds(max_n=10), st.data())
    def test_monotone(self, case, data):
        net, seeds = case
        more = seeds | data.draw(st.sets(st.integers(0, net.n - 1)))
        assert closure(net, seeds).active <= closure(net, more).active

    @settings(max_examples=200, deadline=None)
    @given(networks_with_seeds(max_n=10))
    def test_idempotent(self, case):
        net, seeds = case
        once = closure(net, seeds).active
        assert closure(net, once).active == once


class TestSequential:
    def test_p3_both_orders(self):
        net = path(3, 1)
        assert closure_sequential(net, {1}).convinced_sequence == (0, 2)
        rev = closure_sequential(net, {1}, pick=lambda el: el[-1])
        assert rev.convinced_sequence == (2, 0)
        assert rev.active == {0, 1, 2}

    def test_c4_every_pick(self):
        net = cycle(4, 2)
        for pick in (min, max):
            assert closure_sequential(net, {0, 2}, pick).active == {0, 1, 2, 3}

    def test_already_closed(self):
        net = cycle(5, 2)
        assert closure_sequential(net, {0}).convinced_sequence == ()

    def test_pick_must_be_eligible(self):
        with pytest.raises(ValueError):
            closure_sequential(path(3, 1), {0}, pick=lambda el: 2 if 2 not in el else el[0])

    @settings(max_examples=200, deadline=None)
    @given(networks_with_seeds(max_n=10), st.integers(0, 2**32))
    def test_same_final_set_as_parallel(self, case, salt):
        net, seeds = case
        rng = random.Random(salt)
        res = closure_sequential(net, seeds, pick=lambda el: rng.choice(el))
        assert res.active == closure(net, seeds).active
        assert len(res.convinced_sequence) == len(res.active - set(seeds))


class TestIsTargetSet:
    def test_p4_interior_needed(self):
        assert is_target_set(path(4, 2), {0, 1, 3})
        assert not is_target_set(path(4, 2), {0, 3})

    def test_everything(self):
        assert is_target_set(complete(5, 4), range(5))


class TestReductions:
    def test_triangle_minus_vertex(self):
        red, old = reduce_for_removed_vertex(complete(3, 2), 0)
        assert old == (1, 2)
        assert red.n == 2 and red.m == 1
        assert red.theta == (1, 1)

    def test_star_center(self):
        red, old = reduce_for_removed_vertex(star(3, 1), 0)
        assert red.m == 0 and red.theta == (0, 0, 0)

    def test_non_neighbor_unchanged(self):
        red, old = reduce_for_removed_vertex(path(4, 2), 0)
        assert red.theta == (1, 2, 2)

    def test_cut_threshold(self):
        net = path(3, 2)
        assert reduce_cut_threshold(net, 1, 1).theta[1] == 1
        assert reduce_cut_threshold(net, 1, 0) == net
        assert reduce_cut_threshold(net, 1, 3).theta[1] == -1

    def test_negative_gain(self):
        with pytest.raises(ValueError):
            reduce_cut_threshold(path(3, 2), 1, -1)

    @settings(max_examples=200, deadline=None)
    @given(networks_with_seeds(min_n=2, max_n=9), st.data())
    def test_removed_vertex_models_an_active_seed(self, case, data):
        # closure in G - v with theta_1 equals closure in G with v seeded
        net, seeds = case
        v = data.draw(st.integers(0, net.n - 1))
        red, old = reduce_for_removed_vertex(net, v)
        inv = {o: i for i, o in enumerate(old)}
        local = {inv[s] for s in seeds if s != v}
        got = {old[x] for x in closure(red, local).active}
        assert got == closure(net, seeds | {v}).active - {v}


def test_build_network_isolated_theta_zero():
    net = build_network(2, [], [0, 1])
    assert closure(net, set()).active == {0}

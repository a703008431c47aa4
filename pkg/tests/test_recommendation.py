import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from echosim.errors import ParameterError
from echosim.graphs import NetworkGraph
from echosim.recommendation import exposure_set, recommend
from helpers import cycle_graph, random_instance, star_graph


def test_filter_excludes_pairs_beyond_threshold():
    g = NetworkGraph.from_edges(2, [(0, 1)])
    beliefs = [2.0, -1.0]  # |2 - (-1)| = 3 > 2
    assert recommend(g, beliefs, 0, 2.0) == set()


def test_threshold_wider_than_range_keeps_all_neighbors():
    g = cycle_graph(6)
    beliefs = [-2.0, -1.0, 0.0, 1.0, 2.0, 0.5]
    for i in range(6):
        assert recommend(g, beliefs, i, 4.0) == set(g.adjacency[i])


def test_star_graph_worked_example():
    g = star_graph(4)
    beliefs = [0.0, -2.0, -1.0, 1.0, 2.0]
    assert recommend(g, beliefs, 0, 1.0) == {2, 3}


def test_zero_threshold_keeps_exact_matches_only():
    g = star_graph(3)
    beliefs = [1.0, 1.0, 0.5, 1.0]
    assert recommend(g, beliefs, 0, 0.0) == {1, 3}


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.floats(0, 4), st.floats(0, 4))
def test_monotone_in_threshold(seed, t_a, t_b):
    lo, hi = min(t_a, t_b), max(t_a, t_b)
    g, beliefs = random_instance(np.random.default_rng(seed))
    for i in range(g.n):
        assert recommend(g, beliefs, i, lo) <= recommend(g, beliefs, i, hi)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.floats(0, 4))
def test_symmetry(seed, threshold):
    g, beliefs = random_instance(np.random.default_rng(seed))
    for i in range(g.n):
        for j in range(g.n):
            if i != j:
                assert (j in recommend(g, beliefs, i, threshold)) == (
                    i in recommend(g, beliefs, j, threshold)
                )


def test_exposure_all_neighbors_on_cycle():
    g = cycle_graph(6)
    assert exposure_set(g, [0.0] * 6, 2, "all_neighbors") == [1, 3]


def test_exposure_recommended_with_equal_beliefs_is_full_neighborhood():
    g = star_graph(5)
    assert exposure_set(g, [1.0] * 6, 0, "recommended") == [1, 2, 3, 4, 5]


def test_cap_draws_reproducible_subset():
    g = star_graph(7)
    beliefs = [0.0] * 8
    a = exposure_set(g, beliefs, 0, "recommended", cap=3, rng=np.random.default_rng(4))
    b = exposure_set(g, beliefs, 0, "recommended", cap=3, rng=np.random.default_rng(4))
    assert a == b
    assert len(a) == 3
    assert a == sorted(a)
    assert set(a) <= set(g.adjacency[0])


def test_cap_requires_rng_only_when_it_bites():
    g = star_graph(2)
    assert exposure_set(g, [0.0] * 3, 0, "all_neighbors", cap=5) == [1, 2]
    with pytest.raises(ParameterError):
        exposure_set(star_graph(7), [0.0] * 8, 0, "all_neighbors", cap=3)


def test_parameter_errors():
    g = cycle_graph(4)
    with pytest.raises(ParameterError):
        recommend(g, [0.0] * 4, 9, 1.0)
    with pytest.raises(ParameterError):
        recommend(g, [0.0] * 3, 0, 1.0)
    with pytest.raises(ParameterError):
        recommend(g, [0.0] * 4, 0, -1.0)
    with pytest.raises(ParameterError):
        exposure_set(g, [0.0] * 4, 0, "everything")
    with pytest.raises(ParameterError):
        exposure_set(g, [0.0] * 4, 0, "all_neighbors", cap=0)

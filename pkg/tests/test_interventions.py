import numpy as np
import pytest

from echosim.errors import ParameterError
from echosim.graphs import NetworkGraph
from echosim.interventions import (
    ACTIVE_NUDGE_PREFIX,
    DEFAULT_PASSIVE_TEXTS,
    NudgePolicy,
    active_nudge_content,
    passive_nudge_feed,
    select_targets,
)
from helpers import path_graph


class TestSelectTargets:
    def test_threshold_two_selects_extremes(self):
        assert select_targets([-2.0, 0.0, 2.0], 2) == {0, 2}

    def test_all_moderate_selects_nobody(self):
        assert select_targets([0.0, 0.0, 0.0], 2) == set()

    def test_threshold_one_selects_everything_nonneutral(self):
        assert select_targets([-2.0, -1.0, 1.0, 2.0], 1) == {0, 1, 2, 3}


class TestActiveNudge:
    def test_picks_maximally_opposed_opinion(self):
        g = path_graph(3)
        texts = ["a", "b", "the other side"]
        content = active_nudge_content(0, [2.0, 1.0, -2.0], texts, g)
        assert content is not None
        assert "the other side" in content
        assert content.startswith(ACTIVE_NUDGE_PREFIX)

    def test_no_opposite_sign_no_nudge(self):
        g = path_graph(3)
        assert active_nudge_content(0, [2.0, 1.0, 0.5], ["a", "b", "c"], g) is None

    def test_neutral_target_gets_nothing(self):
        g = path_graph(2)
        assert active_nudge_content(0, [0.0, 2.0], ["a", "b"], g) is None

    def test_tie_breaks_by_graph_distance_then_index(self):
        # target 0 at +2; two candidates at -2: node 3 (three hops) and node 4,
        # which is adjacent. The nearer node 4 wins despite its higher index.
        g = NetworkGraph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4)])
        beliefs = [2.0, 0.5, 0.5, -2.0, -2.0]
        content = active_nudge_content(0, beliefs, ["t0", "t1", "t2", "t3", "t4"], g)
        assert '"t4"' in content
        # equal distances: lower index wins
        g2 = NetworkGraph.from_edges(3, [(0, 1), (0, 2)])
        content2 = active_nudge_content(0, [2.0, -2.0, -2.0], ["x", "near1", "near2"], g2)
        assert '"near1"' in content2

    def test_unreachable_candidate_loses_to_reachable(self):
        g = NetworkGraph.from_edges(4, [(0, 1), (0, 2)])  # node 3 disconnected
        content = active_nudge_content(0, [2.0, 0.5, -2.0, -2.0], ["a", "b", "reach", "island"], g)
        assert '"reach"' in content


class TestPassiveNudge:
    def test_first_draw_is_a_default_text(self):
        feed = passive_nudge_feed(np.random.default_rng(1))
        assert next(feed) in DEFAULT_PASSIVE_TEXTS

    def test_rotation_is_deterministic_per_seed_and_cyclic(self):
        a = passive_nudge_feed(np.random.default_rng(9))
        b = passive_nudge_feed(np.random.default_rng(9))
        seq_a = [next(a) for _ in range(10)]
        seq_b = [next(b) for _ in range(10)]
        assert seq_a == seq_b
        size = len(DEFAULT_PASSIVE_TEXTS)
        for k in range(10 - size):
            assert seq_a[k] == seq_a[k + size]  # round-robin rotation

    def test_singleton_list_always_returns_it(self):
        feed = passive_nudge_feed(np.random.default_rng(2), ("only one",))
        assert [next(feed) for _ in range(5)] == ["only one"] * 5

    def test_both_fixed_statements_are_in_defaults(self):
        assert "Issues are rarely black and white." in DEFAULT_PASSIVE_TEXTS
        assert "Many societal and political issues are complex and multifaceted." in DEFAULT_PASSIVE_TEXTS

    def test_empty_list_rejected(self):
        with pytest.raises(ParameterError):
            passive_nudge_feed(np.random.default_rng(1), ())


class TestNudgePolicy:
    def test_valid_policies(self):
        NudgePolicy().validate()
        NudgePolicy(kind="active", extremity_threshold=1).validate()
        NudgePolicy(kind="passive").validate()

    def test_invalid_policies(self):
        with pytest.raises(ParameterError):
            NudgePolicy(kind="forceful").validate()
        with pytest.raises(ParameterError):
            NudgePolicy(extremity_threshold=3).validate()
        with pytest.raises(ParameterError):
            NudgePolicy(kind="passive", passive_texts=()).validate()

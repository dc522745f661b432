"""Team-queue aggregation of preorder profiles."""

import pytest

from revforge import (Aggregator, FIRST_THEN_FULL_STRATEGY, PartitionError,
                      ROUND_ROBIN_STRATEGY, STQ_STRATEGY, SelectionStrategy,
                      TPO, aggregate, make_strategy, natural_revise, stq)
from revforge.aggregation import STRATEGIES
from revforge.postulates import enumerate_tpos

from conftest import tpo


def test_reference_two_member_aggregate():
    """The two serial revisions of the one-then-rest preorder merge with
    a three-world bottom block, not the conjunction's single world."""
    t0 = tpo({0}, {1, 2, 3})
    ta = natural_revise(t0, frozenset({2, 3}))
    tb = natural_revise(t0, frozenset({1, 3}))
    merged = stq((ta, tb))
    assert merged == tpo({1, 2, 3}, {0})
    assert merged.blocks[0] == frozenset({1, 2, 3})
    assert merged.blocks[0] != frozenset({3})


def test_stq_round_by_round_union():
    a = tpo({0}, {1}, {2}, {3})
    b = tpo({3}, {2}, {1}, {0})
    assert stq((a, b)) == tpo({0, 3}, {1, 2})


def test_aggregation_is_idempotent_on_duplicates():
    for t in enumerate_tpos(4):
        assert stq((t, t)) == t


@pytest.mark.parametrize("name", sorted(STRATEGIES))
def test_singleton_profile_is_identity(name):
    agg = Aggregator(make_strategy(name))
    for t in enumerate_tpos(4):
        assert agg.aggregate((t,)) == t


def test_round_robin_tracks_one_member_per_round():
    flat = tpo({0, 1, 2, 3})
    sharp = tpo({0}, {1}, {2}, {3})
    rr = Aggregator(ROUND_ROBIN_STRATEGY)
    # round 1 consults the flat member and floods every world at once
    assert rr.aggregate((flat, sharp)) == tpo({0, 1, 2, 3})
    # reversed, round 1 takes {0} from the sharp member, round 2 floods the rest
    assert rr.aggregate((sharp, flat)) == tpo({0}, {1, 2, 3})


def test_first_then_full_heeds_everyone_once_then_rotates():
    sharp = tpo({0}, {1}, {2}, {3})
    back = tpo({3}, {2}, {1}, {0})
    ftf = Aggregator(FIRST_THEN_FULL_STRATEGY)
    # round 1 unions both minima; round 2 consults member 1 alone,
    # round 3 member 0 alone
    assert ftf.aggregate((sharp, back)) == tpo({0, 3}, {2}, {1})
    assert ftf.aggregate((back, sharp)) == tpo({0, 3}, {1}, {2})


def test_team_functions():
    assert STQ_STRATEGY.team(3, 5) == frozenset({0, 1, 2})
    assert ROUND_ROBIN_STRATEGY.team(3, 1) == frozenset({0})
    assert ROUND_ROBIN_STRATEGY.team(3, 2) == frozenset({1})
    assert ROUND_ROBIN_STRATEGY.team(3, 4) == frozenset({0})
    assert FIRST_THEN_FULL_STRATEGY.team(3, 1) == frozenset({0, 1, 2})
    assert FIRST_THEN_FULL_STRATEGY.team(3, 2) == frozenset({1})


def test_invalid_team_selections_raise():
    empty = Aggregator(SelectionStrategy("empty", lambda n, i: frozenset()))
    with pytest.raises(PartitionError):
        empty.aggregate((TPO.uniform(4),))
    wild = Aggregator(SelectionStrategy("wild", lambda n, i: frozenset({n + 1})))
    with pytest.raises(PartitionError):
        wild.aggregate((TPO.uniform(4),))


def test_profile_validation_flows_through():
    with pytest.raises(PartitionError):
        stq(())
    with pytest.raises(PartitionError):
        stq((TPO.uniform(4), TPO.uniform(2)))


def test_make_strategy_unknown_name():
    from revforge import UnknownOperatorError
    with pytest.raises(UnknownOperatorError):
        make_strategy("oracle")


def test_aggregate_free_function_matches_method():
    a = tpo({1}, {0, 2, 3})
    b = tpo({2}, {0, 1, 3})
    agg = Aggregator(STQ_STRATEGY)
    assert aggregate(agg, (a, b)) == agg.aggregate((a, b)) == stq((a, b))


def test_output_is_always_a_valid_partition():
    tpos = list(enumerate_tpos(4))
    agg = Aggregator(ROUND_ROBIN_STRATEGY)
    for a in tpos[::7]:
        for b in tpos[::11]:
            out = agg.aggregate((a, b))
            assert out.num_worlds == 4

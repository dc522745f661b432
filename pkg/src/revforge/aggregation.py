"""TeamQueue aggregation of profiles of total preorders.

Aggregation consumes a profile of TPOs over the same worlds and emits a
single TPO.  It runs in rounds: at round i a selection strategy picks a
non-empty team of profile positions, and the round's output block is the
union, over the team, of each member's most plausible still-unplaced
worlds.  Rounds continue until every world is placed.  Because every
member ranks every world, a round with worlds remaining always yields a
non-empty block; should a strategy-supplied team ever produce an empty
one anyway, the round is skipped and emits no block.

The synchronous strategy (``stq``) picks the whole profile every round.
``round-robin`` cycles through single positions.  ``first-then-full``
picks the whole profile in round 1, then cycles.  The family is open:
new strategies register by name.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import PartitionError, UnknownOperatorError
from .tpo import TPO, Profile, validate_profile


@dataclass(frozen=True)
class SelectionStrategy:
    """Names which profile positions get to contribute in each round.

    ``team(n, i)`` returns the 0-based positions selected at round i
    (1-based) from a profile of size n; it must be a non-empty subset of
    ``range(n)``.
    """

    name: str
    team: Callable[[int, int], frozenset[int]] = field(repr=False)


def _team_full(n: int, i: int) -> frozenset[int]:
    return frozenset(range(n))


def _team_round_robin(n: int, i: int) -> frozenset[int]:
    return frozenset({(i - 1) % n})


def _team_first_then_full(n: int, i: int) -> frozenset[int]:
    if i == 1:
        return frozenset(range(n))
    return frozenset({(i - 1) % n})


STQ_STRATEGY = SelectionStrategy("stq", _team_full)
ROUND_ROBIN_STRATEGY = SelectionStrategy("round-robin", _team_round_robin)
FIRST_THEN_FULL_STRATEGY = SelectionStrategy("first-then-full", _team_first_then_full)

STRATEGIES: dict[str, SelectionStrategy] = {
    s.name: s for s in (STQ_STRATEGY, ROUND_ROBIN_STRATEGY, FIRST_THEN_FULL_STRATEGY)
}


def make_strategy(name: str) -> SelectionStrategy:
    try:
        return STRATEGIES[name]
    except KeyError:
        known = ", ".join(sorted(STRATEGIES))
        raise UnknownOperatorError(f"unknown selection strategy {name!r} (known: {known})") from None


def register_strategy(strategy: SelectionStrategy) -> None:
    STRATEGIES[strategy.name] = strategy


@dataclass(frozen=True)
class Aggregator:
    """A profile-to-TPO aggregation map driven by a selection strategy."""

    strategy: SelectionStrategy

    def aggregate(self, profile: Sequence[TPO]) -> TPO:
        return aggregate(self, profile)

    @property
    def name(self) -> str:
        return self.strategy.name


def aggregate(aggregator: Aggregator, profile: Sequence[TPO]) -> TPO:
    """Run the round-by-round team construction over ``profile``."""
    profile = validate_profile(profile)
    n = len(profile)
    remaining = set(range(profile[0].num_worlds))
    blocks: list[frozenset[int]] = []
    round_no = 0
    while remaining:
        round_no += 1
        team = aggregator.strategy.team(n, round_no)
        if not team or not team <= frozenset(range(n)):
            raise PartitionError(
                f"strategy {aggregator.strategy.name!r} selected invalid team {sorted(team)} "
                f"at round {round_no} for a profile of size {n}")
        block: frozenset[int] = frozenset()
        for j in team:
            block |= profile[j].min_of(remaining)
        if not block:
            continue
        blocks.append(block)
        remaining -= block
    return TPO(tuple(blocks))


def stq(profile: Sequence[TPO]) -> TPO:
    """Synchronous aggregation: every member contributes every round."""
    return aggregate(Aggregator(STQ_STRATEGY), profile)

"""Total preorders over worlds, conditional beliefs, and rational closure.

A ``TPO`` is an ordered partition of the worlds ``0 .. n-1`` into
non-empty blocks.  Earlier blocks are more plausible: block 0 holds the
most plausible worlds (rank 1), and a world is weakly below another when
its rank is no larger.  The bottom block is the set of belief worlds,
i.e. the models of everything believed outright.

A ``ConditionalSet`` captures the conditional beliefs a TPO supports: it
accepts the pair (antecedent X, consequent Y) exactly when the most
plausible X-worlds all lie in Y.  Internally it stores, for every
antecedent, the strongest accepted consequent, which doubles as a choice
function.  Conditional sets of TPOs are closed under intersection, and
``rational_closure`` maps any such intersection back to the unique least
committal TPO that supports it, by iteratively peeling off the worlds
that materially satisfy every conditional still in play.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import PartitionError, SpaceError, UnsatisfiableConditionalsError
from .logic import Language

MAX_CONDITIONAL_WORLDS = 8


@dataclass(frozen=True)
class TPO:
    """An ordered partition of ``range(num_worlds)``; block 0 is lowest."""

    blocks: tuple[frozenset[int], ...]

    def __post_init__(self):
        if not self.blocks:
            raise PartitionError("a total preorder needs at least one block")
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        count = 0
        seen: set[int] = set()
        for block in blocks:
            if not block:
                raise PartitionError("blocks must be non-empty")
            if block & seen:
                raise PartitionError(f"blocks overlap on {sorted(block & seen)}")
            seen |= block
            count += len(block)
        if seen != set(range(count)):
            raise PartitionError(f"blocks must cover range({count}) exactly, got {sorted(seen)}")
        ranks = [0] * count
        for depth, block in enumerate(blocks, start=1):
            for world in block:
                ranks[world] = depth
        object.__setattr__(self, "_ranks", tuple(ranks))

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]]) -> "TPO":
        return cls(tuple(frozenset(b) for b in blocks))

    @classmethod
    def uniform(cls, num_worlds: int) -> "TPO":
        """The single-block preorder: every world equally plausible."""
        return cls((frozenset(range(num_worlds)),))

    @classmethod
    def from_ranks(cls, ranks: Sequence[int]) -> "TPO":
        """Build from any per-world keys; equal keys share a block."""
        levels = sorted(set(ranks))
        return cls(tuple(frozenset(w for w, r in enumerate(ranks) if r == level) for level in levels))

    @property
    def num_worlds(self) -> int:
        return len(self._ranks)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)

    def rank(self, world: int) -> int:
        """1-based block index of ``world``; smaller is more plausible."""
        return self._ranks[world]

    def compare(self, x: int, y: int) -> int:
        """Negative if x is strictly more plausible than y, 0 if tied."""
        return self._ranks[x] - self._ranks[y]

    def weakly_below(self, x: int, y: int) -> bool:
        return self._ranks[x] <= self._ranks[y]

    def strictly_below(self, x: int, y: int) -> bool:
        return self._ranks[x] < self._ranks[y]

    def min_of(self, worlds: Iterable[int]) -> frozenset[int]:
        """The most plausible worlds among ``worlds``; empty iff input is."""
        best_rank = 0
        best: list[int] = []
        ranks = self._ranks
        for world in worlds:
            rank = ranks[world]
            if not best or rank < best_rank:
                best_rank = rank
                best = [world]
            elif rank == best_rank:
                best.append(world)
        return frozenset(best)

    def belief_worlds(self) -> frozenset[int]:
        """The bottom block: models of the outright beliefs."""
        return self.blocks[0]

    def believes(self, worlds: frozenset[int]) -> bool:
        """Whether the proposition ``worlds`` is believed outright."""
        return self.blocks[0] <= worlds

    def render(self, lang: Language) -> str:
        """Canonical text, e.g. ``[{10,01} < {11} < {00}]``."""
        if lang.num_worlds != self.num_worlds:
            raise PartitionError(
                f"language has {lang.num_worlds} worlds, preorder has {self.num_worlds}")
        parts = ["{" + ",".join(lang.world_name(w) for w in sorted(block)) + "}"
                 for block in self.blocks]
        return "[" + " < ".join(parts) + "]"

    def __repr__(self) -> str:
        parts = ["{" + ",".join(str(w) for w in sorted(block)) + "}" for block in self.blocks]
        return "TPO[" + " < ".join(parts) + "]"


Profile = tuple[TPO, ...]


def validate_profile(profile: Sequence[TPO]) -> Profile:
    """Check a profile is non-empty and shares one set of worlds."""
    profile = tuple(profile)
    if not profile:
        raise PartitionError("a profile needs at least one preorder")
    width = profile[0].num_worlds
    for t in profile[1:]:
        if t.num_worlds != width:
            raise PartitionError("profile members must share the same worlds")
    return profile


class ConditionalSet:
    """The conditionals accepted by a TPO, or an intersection of such.

    ``table`` maps every antecedent (as a frozenset of worlds) to the
    strongest accepted consequent; the pair (X, Y) is accepted exactly
    when ``table[X] <= Y``.  The empty antecedent maps to the empty set,
    so it accepts every consequent.
    """

    def __init__(self, num_worlds: int, table: Mapping[frozenset[int], frozenset[int]]):
        self.num_worlds = num_worlds
        self._table = dict(table)

    @classmethod
    def from_tpo(cls, t: TPO) -> "ConditionalSet":
        if t.num_worlds > MAX_CONDITIONAL_WORLDS:
            raise SpaceError(
                f"conditional tables materialize all antecedents; "
                f"supported up to {MAX_CONDITIONAL_WORLDS} worlds, got {t.num_worlds}")
        n = t.num_worlds
        table = {}
        for mask in range(1 << n):
            antecedent = frozenset(w for w in range(n) if (mask >> w) & 1)
            table[antecedent] = t.min_of(antecedent)
        return cls(n, table)

    def accepts(self, antecedent: frozenset[int], consequent: frozenset[int]) -> bool:
        return self._table[frozenset(antecedent)] <= frozenset(consequent)

    def strongest(self, antecedent: frozenset[int]) -> frozenset[int]:
        return self._table[frozenset(antecedent)]

    def antecedents(self) -> Iterable[frozenset[int]]:
        return self._table.keys()

    def intersect(self, other: "ConditionalSet") -> "ConditionalSet":
        """Conditionals accepted by both sides.

        (X, Y) is in the intersection iff Y covers both strongest
        consequents, so the table entries union pointwise.
        """
        if other.num_worlds != self.num_worlds:
            raise PartitionError("conditional sets must share the same worlds")
        return ConditionalSet(
            self.num_worlds,
            {x: self._table[x] | other._table[x] for x in self._table})

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, ConditionalSet)
                and self.num_worlds == other.num_worlds
                and self._table == other._table)

    def __hash__(self) -> int:
        return hash((self.num_worlds, frozenset(self._table.items())))

    def __repr__(self) -> str:
        pairs = sum(1 for x in self._table)
        return f"ConditionalSet({self.num_worlds} worlds, {pairs} antecedents)"


def conditional_set(t: TPO) -> ConditionalSet:
    """The conditionals ``t`` accepts."""
    return ConditionalSet.from_tpo(t)


def intersect_conditionals(sets: Sequence[ConditionalSet]) -> ConditionalSet:
    if not sets:
        raise PartitionError("need at least one conditional set")
    result = sets[0]
    for other in sets[1:]:
        result = result.intersect(other)
    return result


def rational_closure(conditionals: ConditionalSet) -> TPO:
    """The least committal TPO supporting ``conditionals``.

    Level by level, collect the worlds that materially satisfy every
    conditional whose antecedent avoids all lower levels; a world x
    materially satisfies (X, Y) when x is outside X or inside Y.  Checking
    only the strongest consequent per antecedent suffices.  If some round
    strands worlds that satisfy nothing, no TPO supports the input.
    """
    n = conditionals.num_worlds
    by_world: list[list[tuple[frozenset[int], frozenset[int]]]] = [[] for _ in range(n)]
    for antecedent in conditionals.antecedents():
        consequent = conditionals.strongest(antecedent)
        for world in antecedent:
            by_world[world].append((antecedent, consequent))
    remaining = set(range(n))
    settled: set[int] = set()
    blocks: list[frozenset[int]] = []
    while remaining:
        level = frozenset(
            world for world in remaining
            if all(world in consequent
                   for antecedent, consequent in by_world[world]
                   if not (antecedent & settled)))
        if not level:
            raise UnsatisfiableConditionalsError(
                f"no total preorder supports these conditionals; stuck on worlds {sorted(remaining)}")
        blocks.append(level)
        settled |= level
        remaining -= level
    return TPO(tuple(blocks))

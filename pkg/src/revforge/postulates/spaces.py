"""Instance spaces: what the postulate checker quantifies over.

An instance space fixes a language (by atom count, with atoms named A,
B, C, ...), a source of total preorders, a family of input sets drawn
from the consistent propositions of the language, and the operator
configuration under test.  Exhaustive spaces enumerate everything and
are confined to at most 2 atoms, where the 16 worlds-squared scale keeps
full sweeps cheap; sampled spaces draw seeded pseudo-random instances
and must state their seed so every report is reproducible.

Input-set families quantify over propositions up to semantic
equivalence: each member is a distinct non-empty set of worlds.  Pair
shapes draw both sets from the jointly-consistent family, because a set
whose own conjunction is inconsistent only ever yields undefined or
trivially-satisfied pair instances.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ..aggregation import SelectionStrategy, make_strategy
from ..errors import SpaceError
from ..logic import Language
from ..serial import (
    SerialContractionOperator,
    SerialRevisionOperator,
    get_contraction_operator,
    get_revision_operator,
)
from ..tpo import TPO

DEFAULT_SEED = 1729
MAX_ENUM_WORLDS = 8
_ATOM_POOL = ("A", "B", "C", "D")


def enumerate_tpos(num_worlds: int) -> Iterator[TPO]:
    """All total preorders over ``range(num_worlds)``, deterministically.

    Generated as ordered set partitions: every non-empty subset of the
    unplaced worlds (in ascending bitmask order) can be the next block.
    """
    if not 1 <= num_worlds <= MAX_ENUM_WORLDS:
        raise SpaceError(f"exhaustive enumeration supports 1..{MAX_ENUM_WORLDS} worlds")

    def partitions(unplaced: tuple[int, ...]) -> Iterator[tuple[frozenset[int], ...]]:
        if not unplaced:
            yield ()
            return
        for mask in range(1, 1 << len(unplaced)):
            block = frozenset(unplaced[i] for i in range(len(unplaced)) if (mask >> i) & 1)
            rest = tuple(w for w in unplaced if w not in block)
            for tail in partitions(rest):
                yield (block,) + tail

    for blocks in partitions(tuple(range(num_worlds))):
        yield TPO(blocks)


def all_propositions(num_worlds: int) -> tuple[frozenset[int], ...]:
    """Every consistent proposition, in ascending bitmask order."""
    return tuple(
        frozenset(w for w in range(num_worlds) if (mask >> w) & 1)
        for mask in range(1, 1 << num_worlds))


def formula_set_tuples(props: Sequence[frozenset[int]], max_size: int,
                       jointly_consistent: bool) -> Iterator[tuple[frozenset[int], ...]]:
    """Input sets of 1..max_size distinct propositions, in a stable order."""
    for size in range(1, max_size + 1):
        for combo in itertools.combinations(props, size):
            if jointly_consistent:
                target = combo[0]
                for member in combo[1:]:
                    target = target & member
                if not target:
                    continue
            yield combo


def random_tpo(rng: random.Random, num_worlds: int) -> TPO:
    """A seeded pseudo-random TPO; coverage-oriented, not uniform."""
    worlds = list(range(num_worlds))
    rng.shuffle(worlds)
    blocks: list[set[int]] = [{worlds[0]}]
    for world in worlds[1:]:
        if rng.random() < 0.5:
            blocks.append({world})
        else:
            blocks[-1].add(world)
    return TPO(tuple(frozenset(b) for b in blocks))


def _random_proposition(rng: random.Random, num_worlds: int) -> frozenset[int]:
    mask = rng.randrange(1, 1 << num_worlds)
    return frozenset(w for w in range(num_worlds) if (mask >> w) & 1)


def _random_set_tuple(rng: random.Random, num_worlds: int, max_size: int,
                      jointly_consistent: bool) -> tuple[frozenset[int], ...]:
    for _ in range(1000):
        size = rng.randint(1, max_size)
        members: list[frozenset[int]] = []
        for _ in range(size):
            member = _random_proposition(rng, num_worlds)
            if member not in members:
                members.append(member)
        if jointly_consistent:
            target = frozenset(range(num_worlds))
            for member in members:
                target &= member
            if not target:
                continue
        return tuple(members)
    raise SpaceError("could not sample a jointly consistent input set")


@dataclass
class OperatorConfig:
    """Which operators a check runs against.

    Fields accept registry names or operator objects, so tests can slot
    in deliberately broken operators to validate the checker itself.
    """

    revision: str | SerialRevisionOperator = "natural"
    contraction: str | SerialContractionOperator = "natural-contract"
    base: str | SerialRevisionOperator = "natural"
    finisher: str | SerialRevisionOperator = "natural"
    strategy: str | SelectionStrategy = "stq"

    def resolved_revision(self) -> SerialRevisionOperator:
        return get_revision_operator(self.revision) if isinstance(self.revision, str) else self.revision

    def resolved_contraction(self) -> SerialContractionOperator:
        return (get_contraction_operator(self.contraction)
                if isinstance(self.contraction, str) else self.contraction)

    def resolved_base(self) -> SerialRevisionOperator:
        return get_revision_operator(self.base) if isinstance(self.base, str) else self.base

    def resolved_finisher(self) -> SerialRevisionOperator:
        return get_revision_operator(self.finisher) if isinstance(self.finisher, str) else self.finisher

    def resolved_strategy(self) -> SelectionStrategy:
        return make_strategy(self.strategy) if isinstance(self.strategy, str) else self.strategy

    def describe(self) -> dict:
        def name(value) -> str:
            return value if isinstance(value, str) else value.name
        return {
            "revision": name(self.revision),
            "contraction": name(self.contraction),
            "base": name(self.base),
            "finisher": name(self.finisher),
            "strategy": name(self.strategy),
        }


@dataclass
class InstanceSpace:
    """A quantification domain for postulate checks."""

    atoms: int = 2
    mode: str = "exhaustive"
    sample_count: int = 0
    seed: int | None = None
    max_set_size: int = 2
    operators: OperatorConfig = field(default_factory=OperatorConfig)
    violation_cap: int = 10

    def __post_init__(self):
        if self.mode not in ("exhaustive", "sampled"):
            raise SpaceError(f"unknown space mode {self.mode!r}")
        if self.mode == "exhaustive":
            if not 1 <= self.atoms <= 2:
                raise SpaceError("exhaustive spaces support 1 or 2 atoms only")
        else:
            if not 1 <= self.atoms <= len(_ATOM_POOL):
                raise SpaceError(f"sampled spaces support 1..{len(_ATOM_POOL)} atoms")
            if self.sample_count < 1:
                raise SpaceError("sampled spaces need sample_count >= 1")
            if self.seed is None:
                raise SpaceError("sampled spaces need an explicit seed for reproducibility")
        if self.max_set_size < 1:
            raise SpaceError("max_set_size must be at least 1")

    @property
    def lang(self) -> Language:
        return Language(_ATOM_POOL[:self.atoms])

    @property
    def num_worlds(self) -> int:
        return 1 << self.atoms

    def describe(self) -> dict:
        info: dict = {"atoms": self.atoms, "mode": self.mode, "max_set_size": self.max_set_size}
        if self.mode == "sampled":
            info["sample_count"] = self.sample_count
        info["operators"] = self.operators.describe()
        return info

    # instance streams, one per postulate shape

    def instances(self, shape: str) -> Iterator[tuple]:
        if self.mode == "exhaustive":
            return self._exhaustive(shape)
        return self._sampled(shape)

    def _exhaustive(self, shape: str) -> Iterator[tuple]:
        props = all_propositions(self.num_worlds)
        tpos = tuple(enumerate_tpos(self.num_worlds))
        if shape in ("serial", "sercon"):
            return ((t, a) for t in tpos for a in props)
        if shape == "serial2":
            return ((t, a, b) for t in tpos for a in props for b in props)
        if shape == "pset":
            sets = tuple(formula_set_tuples(props, self.max_set_size, jointly_consistent=True))
            return ((t, s) for t in tpos for s in sets)
        if shape == "cset":
            sets = tuple(formula_set_tuples(props, self.max_set_size, jointly_consistent=False))
            return ((t, s) for t in tpos for s in sets)
        if shape == "pset2":
            sets = tuple(formula_set_tuples(props, self.max_set_size, jointly_consistent=True))
            return ((t, s1, s2) for t in tpos for s1 in sets for s2 in sets)
        if shape == "profile2":
            return (((t1, t2),) for t1 in tpos for t2 in tpos)
        raise SpaceError(f"unknown instance shape {shape!r}")

    def _sampled(self, shape: str) -> Iterator[tuple]:
        rng = random.Random(self.seed)
        n = self.num_worlds

        def one(shape: str) -> tuple:
            if shape in ("serial", "sercon"):
                return (random_tpo(rng, n), _random_proposition(rng, n))
            if shape == "serial2":
                return (random_tpo(rng, n), _random_proposition(rng, n),
                        _random_proposition(rng, n))
            if shape == "pset":
                return (random_tpo(rng, n), _random_set_tuple(rng, n, self.max_set_size, True))
            if shape == "cset":
                return (random_tpo(rng, n), _random_set_tuple(rng, n, self.max_set_size, False))
            if shape == "pset2":
                return (random_tpo(rng, n),
                        _random_set_tuple(rng, n, self.max_set_size, True),
                        _random_set_tuple(rng, n, self.max_set_size, True))
            if shape == "profile2":
                return ((random_tpo(rng, n), random_tpo(rng, n)),)
            raise SpaceError(f"unknown instance shape {shape!r}")

        return (one(shape) for _ in range(self.sample_count))

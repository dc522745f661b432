"""The postulate-checking engine.

``check`` sweeps a postulate over an instance space and returns a
``CheckReport`` whose violations carry replayable witnesses: enough of
the instance (preorder blocks, input sets, operator names) to rebuild
and re-evaluate it bit-for-bit with ``replay_witness``.  Worlds are
rendered as atom bit-strings throughout.

``find_countermodel`` short-circuits at the first witness.
``check_equivalence_pair`` sweeps a semantic postulate against its
syntactic companion form and reports every instance where the two
disagree.  ``verify_rc_identity`` checks that synchronous aggregation
commutes with conditional-belief intersection followed by rational
closure.

A ``CheckContext`` carries the resolved operators plus memo tables for
serial, aggregate, and pipeline results; sweeps that share operators
should share one context.
"""

from __future__ import annotations

import itertools
import json
import time
from dataclasses import dataclass, field
from typing import Optional

from ..aggregation import Aggregator
from ..errors import InconsistentInputError, SpaceError, UnknownPostulateError
from ..logic import Formula, Language, canonical_formula
from ..parallel import ParallelContractionOperator, ParallelRevisionOperator
from ..tpo import TPO, conditional_set, rational_closure
from .catalog import CATALOG, EQUIVALENCE_PAIRS, SYNTACTIC_FORMS, Postulate
from .spaces import _ATOM_POOL, InstanceSpace, OperatorConfig, all_propositions


class _Memo(dict):
    """Insertion-ordered dict that sheds its oldest entries at a cap.

    Sweeps visit one prior order at a time, so stale keys belong to
    orders the sweep will never revisit; plain FIFO eviction keeps the
    working set intact while bounding memory on sampled spaces, where
    random preorders never repeat.
    """

    __slots__ = ("cap",)

    def __init__(self, cap: int = 150_000):
        super().__init__()
        self.cap = cap

    def put(self, key, value) -> None:
        if len(self) >= self.cap:
            drop = self.cap // 8
            for stale in list(itertools.islice(iter(self), drop)):
                del self[stale]
        self[key] = value


class CheckContext:
    """Resolved operators plus memo tables for one sweep configuration."""

    def __init__(self, lang: Language, config: OperatorConfig):
        self.lang = lang
        self.config = config
        self.full = lang.all_worlds
        self.props = all_propositions(lang.num_worlds)
        self.subsets = (frozenset(),) + self.props
        self.revision = config.resolved_revision()
        self.contraction = config.resolved_contraction()
        self.base = config.resolved_base()
        self.finisher = config.resolved_finisher()
        self.aggregator = Aggregator(config.resolved_strategy())
        self.parallel_rev = ParallelRevisionOperator(self.base, self.finisher, self.aggregator)
        self.parallel_con = ParallelContractionOperator(self.contraction, self.aggregator)
        self._serial_cache = _Memo()
        self._agg_cache = _Memo()
        self._prev_cache = _Memo()
        self._pcon_cache = _Memo()
        self._canonical: dict = {}

    @classmethod
    def from_space(cls, space: InstanceSpace) -> "CheckContext":
        return cls(space.lang, space.operators)

    def canonical(self, worlds: frozenset[int]) -> Formula:
        hit = self._canonical.get(worlds)
        if hit is None:
            hit = canonical_formula(worlds, self.lang)
            self._canonical[worlds] = hit
        return hit

    def _serial(self, op, transform, t: TPO, sat: frozenset[int]) -> TPO:
        key = (id(op), t, sat)
        hit = self._serial_cache.get(key)
        if hit is None:
            hit = transform(t, sat)
            self._serial_cache.put(key, hit)
        return hit

    def revise(self, t: TPO, sat: frozenset[int]) -> TPO:
        return self._serial(self.revision, self.revision.revise, t, sat)

    def contract(self, t: TPO, sat: frozenset[int]) -> TPO:
        return self._serial(self.contraction, self.contraction.contract, t, sat)

    def aggregate(self, profile: tuple[TPO, ...]) -> TPO:
        hit = self._agg_cache.get(profile)
        if hit is None:
            hit = self.aggregator.aggregate(profile)
            self._agg_cache.put(profile, hit)
        return hit

    def previse(self, t: TPO, sets: tuple[frozenset[int], ...]) -> TPO:
        """Cached parallel revision; mirrors the pipeline operator."""
        sets = tuple(sets) or (self.full,)
        key = (t, sets)
        hit = self._prev_cache.get(key)
        if hit is None:
            target = self.full
            for member in sets:
                target &= member
            if not target:
                raise InconsistentInputError("revision input set is jointly inconsistent")
            profile = tuple(self._serial(self.base, self.base.revise, t, m) for m in sets)
            hit = self._serial(self.finisher, self.finisher.revise,
                               self.aggregate(profile), target)
            self._prev_cache.put(key, hit)
        return hit

    def pcontract(self, t: TPO, sets: tuple[frozenset[int], ...]) -> TPO:
        """Cached parallel contraction; mirrors the pipeline operator."""
        sets = tuple(sets) or (self.full,)
        key = (t, sets)
        hit = self._pcon_cache.get(key)
        if hit is None:
            profile = tuple(
                self._serial(self.contraction, self.contraction.contract, t, m) for m in sets)
            hit = self.aggregate(profile)
            self._pcon_cache.put(key, hit)
        return hit


def render_value(value, lang: Language):
    """Make a hit/instance value JSON-friendly; worlds become bit-strings."""
    if isinstance(value, TPO):
        return value.render(lang)
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return lang.world_name(value)
    if isinstance(value, (frozenset, set)):
        return sorted(lang.world_name(w) for w in value)
    if isinstance(value, (list, tuple)):
        return [render_value(v, lang) for v in value]
    if isinstance(value, dict):
        return {k: render_value(v, lang) for k, v in value.items()}
    return value


def _blocks(t: TPO, lang: Language) -> list[list[str]]:
    return [sorted(lang.world_name(w) for w in block) for block in t.blocks]


def _instance_payload(shape: str, instance: tuple, lang: Language) -> dict:
    if shape in ("serial", "sercon"):
        t, a = instance
        return {"tpo": _blocks(t, lang), "input": render_value(a, lang)}
    if shape == "serial2":
        t, a, b = instance
        return {"tpo": _blocks(t, lang), "input": render_value(a, lang),
                "input2": render_value(b, lang)}
    if shape in ("pset", "cset"):
        t, s = instance
        return {"tpo": _blocks(t, lang), "inputs": [render_value(m, lang) for m in s]}
    if shape == "pset2":
        t, s1, s2 = instance
        return {"tpo": _blocks(t, lang),
                "inputs": [render_value(m, lang) for m in s1],
                "inputs2": [render_value(m, lang) for m in s2]}
    if shape == "profile2":
        (profile,) = instance
        return {"profile": [_blocks(t, lang) for t in profile]}
    raise SpaceError(f"unknown instance shape {shape!r}")


def _make_witness(postulate: Postulate, instance: tuple, hit: dict, ctx: CheckContext) -> dict:
    return {
        "instance": _instance_payload(postulate.shape, instance, ctx.lang),
        "operators": ctx.config.describe(),
        "detail": render_value(hit, ctx.lang),
    }


@dataclass
class CheckReport:
    """Outcome of sweeping one postulate over one instance space."""

    postulate: str
    space: dict
    checked: int
    violations: list
    seed: Optional[int]
    elapsed_ms: float
    kind: str = "universal"
    expected: str = "sound"
    total_hits: int = 0

    @property
    def holds(self) -> bool:
        if self.kind == "existential":
            return self.total_hits > 0
        return self.total_hits == 0

    @property
    def outcome(self) -> str:
        return "holds" if self.holds else "fails"

    def matches_expected(self) -> bool:
        if self.expected == "exploratory":
            return True
        if self.expected == "sound":
            return self.holds
        return not self.holds

    def to_json_dict(self) -> dict:
        # field order is part of the report contract
        return {
            "postulate": self.postulate,
            "space": self.space,
            "checked": self.checked,
            "violations": self.violations,
            "seed": self.seed,
            "elapsed_ms": self.elapsed_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def summary_line(self) -> str:
        noun = "witnesses" if self.kind == "existential" else "violations"
        return (f"{self.postulate}: {self.outcome} over {self.checked} instances "
                f"({self.total_hits} {noun}, {self.elapsed_ms:.1f} ms)")


def _get_postulate(postulate_id: str) -> Postulate:
    try:
        return CATALOG[postulate_id]
    except KeyError:
        known = ", ".join(sorted(CATALOG))
        raise UnknownPostulateError(
            f"unknown postulate {postulate_id!r} (known: {known})") from None


def check(postulate_id: str, space: InstanceSpace, *, first: bool = False,
          ctx: Optional[CheckContext] = None) -> CheckReport:
    """Sweep one postulate over ``space`` and report."""
    postulate = _get_postulate(postulate_id)
    ctx = ctx or CheckContext.from_space(space)
    start = time.perf_counter()
    checked = 0
    total_hits = 0
    kept: list[dict] = []
    cap = space.violation_cap
    for instance in space.instances(postulate.shape):
        hits = postulate.evaluate(ctx, *instance)
        if hits is None:
            continue
        checked += 1
        if hits:
            total_hits += len(hits)
            for hit in hits:
                if len(kept) < cap:
                    kept.append(_make_witness(postulate, instance, hit, ctx))
            if first:
                break
    elapsed = (time.perf_counter() - start) * 1000.0
    return CheckReport(
        postulate=postulate_id,
        space=space.describe(),
        checked=checked,
        violations=kept,
        seed=space.seed,
        elapsed_ms=round(elapsed, 3),
        kind=postulate.kind,
        expected=postulate.expected_for(space.operators),
        total_hits=total_hits,
    )


def find_countermodel(postulate_id: str, space: InstanceSpace,
                      ctx: Optional[CheckContext] = None) -> Optional[dict]:
    """First witness violating (or, for existential entries, satisfying)
    the postulate over ``space``; None if the sweep finds nothing."""
    report = check(postulate_id, space, first=True, ctx=ctx)
    return report.violations[0] if report.violations else None


def check_equivalence_pair(semantic_id: str, syntactic_id: str, space: InstanceSpace,
                           ctx: Optional[CheckContext] = None) -> CheckReport:
    """Sweep a semantic form against its syntactic companion.

    A violation is an instance where one form holds and the other does
    not.  Both are evaluated per instance: the semantic form locally over
    world pairs, the syntactic form by quantifying follow-up inputs over
    every consistent proposition and re-applying the operator.
    """
    if EQUIVALENCE_PAIRS.get(semantic_id) != syntactic_id:
        known = ", ".join(f"{a}~{b}" for a, b in sorted(EQUIVALENCE_PAIRS.items()))
        raise UnknownPostulateError(
            f"{semantic_id!r}/{syntactic_id!r} is not a recognized agreement pair (known: {known})")
    semantic = CATALOG[semantic_id]
    syntactic = SYNTACTIC_FORMS[syntactic_id]
    ctx = ctx or CheckContext.from_space(space)
    start = time.perf_counter()
    checked = 0
    total_hits = 0
    kept: list[dict] = []
    for instance in space.instances("pset"):
        sem_hits = semantic.evaluate(ctx, *instance)
        if sem_hits is None:
            continue
        checked += 1
        sem_holds = not sem_hits
        syn_holds = syntactic.holds(ctx, *instance)
        if sem_holds != syn_holds:
            total_hits += 1
            if len(kept) < space.violation_cap:
                kept.append({
                    "instance": _instance_payload("pset", instance, ctx.lang),
                    "operators": ctx.config.describe(),
                    "detail": {"semantic_holds": sem_holds, "syntactic_holds": syn_holds},
                })
    elapsed = (time.perf_counter() - start) * 1000.0
    return CheckReport(
        postulate=f"{semantic_id}~{syntactic_id}",
        space=space.describe(),
        checked=checked,
        violations=kept,
        seed=space.seed,
        elapsed_ms=round(elapsed, 3),
        expected="sound",
        total_hits=total_hits,
    )


def verify_rc_identity(space: InstanceSpace) -> CheckReport:
    """Synchronous aggregation versus rational closure of intersected
    conditional beliefs: the two routes must land on the same preorder.

    The left route aggregates the profile synchronously and reads off its
    conditional beliefs; the right route intersects the members'
    conditional beliefs and rebuilds the least committal preorder
    supporting them, without ever aggregating.
    """
    from ..aggregation import stq

    start = time.perf_counter()
    tables: dict[TPO, object] = {}

    def cbel(t: TPO):
        hit = tables.get(t)
        if hit is None:
            hit = conditional_set(t)
            tables[t] = hit
        return hit

    checked = 0
    total_hits = 0
    kept: list[dict] = []
    lang = space.lang
    for (profile,) in space.instances("profile2"):
        merged = cbel(profile[0])
        for t in profile[1:]:
            merged = merged.intersect(cbel(t))
        closed = rational_closure(merged)
        direct = stq(profile)
        checked += 1
        if cbel(direct) != cbel(closed):
            total_hits += 1
            if len(kept) < space.violation_cap:
                kept.append({
                    "instance": _instance_payload("profile2", (profile,), lang),
                    "operators": {"strategy": "stq"},
                    "detail": {"aggregated": direct, "closure_of_intersection": closed},
                })
    elapsed = (time.perf_counter() - start) * 1000.0
    return CheckReport(
        postulate="rc-identity",
        space=space.describe(),
        checked=checked,
        violations=[{**w, "detail": render_value(w["detail"], lang)} for w in kept],
        seed=space.seed,
        elapsed_ms=round(elapsed, 3),
        expected="sound",
        total_hits=total_hits,
    )


def replay_witness(postulate_id: str, witness: dict, atoms: int) -> list:
    """Rebuild a witness's instance and re-evaluate it.

    Returns the rendered hits; a faithful violation witness reproduces at
    least the hit it was reported with.
    """
    postulate = _get_postulate(postulate_id)
    lang = Language(_ATOM_POOL[:atoms])
    ctx = CheckContext(lang, OperatorConfig(**witness["operators"]))
    payload = witness["instance"]

    def worlds(names) -> frozenset[int]:
        return frozenset(lang.world_from_name(n) for n in names)

    def tpo(blocks) -> TPO:
        return TPO(tuple(worlds(b) for b in blocks))

    shape = postulate.shape
    if shape in ("serial", "sercon"):
        instance = (tpo(payload["tpo"]), worlds(payload["input"]))
    elif shape == "serial2":
        instance = (tpo(payload["tpo"]), worlds(payload["input"]), worlds(payload["input2"]))
    elif shape in ("pset", "cset"):
        instance = (tpo(payload["tpo"]), tuple(worlds(m) for m in payload["inputs"]))
    elif shape == "pset2":
        instance = (tpo(payload["tpo"]),
                    tuple(worlds(m) for m in payload["inputs"]),
                    tuple(worlds(m) for m in payload["inputs2"]))
    elif shape == "profile2":
        instance = (tuple(tpo(blocks) for blocks in payload["profile"]),)
    else:
        raise SpaceError(f"unknown instance shape {shape!r}")
    hits = postulate.evaluate(ctx, *instance)
    if hits is None:
        return []
    return [render_value(hit, lang) for hit in hits]

"""The closed catalog of checkable postulates.

Each entry binds an identifier to one executable predicate over
instances of a fixed shape:

* ``serial``   (t, a): one preorder, one consistent input proposition.
* ``sercon``   (t, a): same, checked against the contraction operator.
* ``serial2``  (t, a, b): one preorder, two input propositions.
* ``pset``     (t, s): a preorder and a jointly consistent input set.
* ``pset2``    (t, s1, s2): a preorder and two input sets.
* ``cset``     (t, s): a preorder and an input set for contraction.
* ``profile2`` (profile,): a pair of preorders for aggregation checks.

Postulates are stated in their semantic form, as constraints on how the
posterior preorder relates to the prior one; belief-set conditions are
phrased through belief worlds (a sentence is believed exactly when the
belief worlds sit inside its models).  Syntactic companion forms, which
quantify over follow-up inputs and apply the operator again, live in
``SYNTACTIC_FORMS`` and are exercised through the agreement-pair check.

Evaluators return a list of hit dictionaries (empty when the instance
is fine) or ``None`` when the instance falls outside the postulate's
domain of definition and is skipped.  For the one existential entry the
hits are witnesses rather than violations, and the property holds over
a space when at least one witness turns up.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from ..logic import And, Not, models
from ..tpo import TPO

Hits = "list[dict] | None"


@dataclass(frozen=True)
class Postulate:
    id: str
    shape: str
    summary: str
    evaluate: Callable = field(repr=False)
    kind: str = "universal"
    expected: object = "sound"

    def expected_for(self, config) -> str:
        """Expected outcome for an operator configuration:
        'sound', 'violated', or 'exploratory'."""
        return self.expected(config) if callable(self.expected) else self.expected


CATALOG: dict[str, Postulate] = {}


def _register(id: str, shape: str, summary: str, *, kind: str = "universal",
              expected: object = "sound"):
    def wrap(fn):
        CATALOG[id] = Postulate(id, shape, summary, fn, kind, expected)
        return fn
    return wrap


def _sym(diff: int) -> str:
    return "<" if diff < 0 else (">" if diff > 0 else "~")


def _order_flips(t: TPO, t2: TPO, region: Iterable[int]) -> list[dict]:
    """Pairs in ``region`` whose comparison changes between t and t2."""
    worlds = sorted(region)
    hits = []
    for i, x in enumerate(worlds):
        for y in worlds[i + 1:]:
            before = t.compare(x, y)
            after = t2.compare(x, y)
            if _sym(before) != _sym(after):
                hits.append({"x": x, "y": y, "prior": _sym(before), "posterior": _sym(after)})
    return hits


def _kept_below(t: TPO, t2: TPO, inside: Iterable[int], outside: Iterable[int],
                weak: bool) -> list[dict]:
    """Inside-worlds weakly/strictly below outside-worlds must stay so."""
    hits = []
    for x in sorted(inside):
        for y in sorted(outside):
            if weak:
                if t.weakly_below(x, y) and not t2.weakly_below(x, y):
                    hits.append({"x": x, "y": y, "prior": "<=", "posterior": ">"})
            else:
                if t.strictly_below(x, y) and not t2.strictly_below(x, y):
                    hits.append({"x": x, "y": y, "prior": "<", "posterior": _sym(t2.compare(x, y))})
    return hits


def _promoted(t: TPO, t2: TPO, inside: Iterable[int], outside: Iterable[int]) -> list[dict]:
    """Weakly-below inside-worlds must end up strictly below."""
    hits = []
    for x in sorted(inside):
        for y in sorted(outside):
            if t.weakly_below(x, y) and not t2.strictly_below(x, y):
                hits.append({"x": x, "y": y, "prior": _sym(t.compare(x, y)),
                             "posterior": _sym(t2.compare(x, y))})
    return hits


def _intersect(sets: tuple[frozenset[int], ...], full: frozenset[int]) -> frozenset[int]:
    result = full
    for member in sets:
        result &= member
    return result


def _union(sets: tuple[frozenset[int], ...]) -> frozenset[int]:
    result: frozenset[int] = frozenset()
    for member in sets:
        result |= member
    return result


def _merge(s1: tuple[frozenset[int], ...], s2: tuple[frozenset[int], ...]) -> tuple:
    merged = list(s1)
    for member in s2:
        if member not in merged:
            merged.append(member)
    return tuple(merged)


# --- serial revision ---

@_register("K1", "serial", "revised belief sets are deductively closed")
def _k1(ctx, t, a):
    # Beliefs are represented by their worlds, so closure cannot fail;
    # kept executable so the catalog stays total.
    ctx.revise(t, a)
    return []


@_register("K2", "serial", "the input is believed after revising by it")
def _k2(ctx, t, a):
    beliefs = ctx.revise(t, a).belief_worlds()
    if not beliefs <= a:
        return [{"beliefs": beliefs, "input": a}]
    return []


@_register("K3", "serial", "revision keeps any prior beliefs consistent with the input")
def _k3(ctx, t, a):
    expansion = t.belief_worlds() & a
    beliefs = ctx.revise(t, a).belief_worlds()
    if not expansion <= beliefs:
        return [{"expansion": expansion, "beliefs": beliefs}]
    return []


@_register("K4", "serial", "revision adds nothing beyond expansion when the input is compatible")
def _k4(ctx, t, a):
    expansion = t.belief_worlds() & a
    if not expansion:
        return []
    beliefs = ctx.revise(t, a).belief_worlds()
    if not beliefs <= expansion:
        return [{"expansion": expansion, "beliefs": beliefs}]
    return []


@_register("K5", "serial", "revising by a consistent input yields consistent beliefs")
def _k5(ctx, t, a):
    beliefs = ctx.revise(t, a).belief_worlds()
    if not beliefs:
        return [{"input": a}]
    return []


@_register("K6", "serial", "syntactically different but equivalent inputs revise alike")
def _k6(ctx, t, a):
    # Operators act on model sets, so this is structural; exercised
    # through the formula layer to guard the parsing/models plumbing.
    formula = ctx.canonical(a)
    reference = ctx.revise(t, a).belief_worlds()
    for variant in (Not(Not(formula)), And(formula, formula)):
        beliefs = ctx.revise(t, models(variant, ctx.lang)).belief_worlds()
        if beliefs != reference:
            return [{"input": a, "variant_beliefs": beliefs, "beliefs": reference}]
    return []


@_register("K7", "serial2", "revising by a conjunction keeps everything expansion would add")
def _k7(ctx, t, a, b):
    both = a & b
    if not both:
        return None
    lhs = ctx.revise(t, a).belief_worlds() & b
    rhs = ctx.revise(t, both).belief_worlds()
    if not lhs <= rhs:
        return [{"expansion": lhs, "conjunction_beliefs": rhs}]
    return []


@_register("K8", "serial2", "expansion of a revision is conservative when consistent")
def _k8(ctx, t, a, b):
    lhs = ctx.revise(t, a).belief_worlds() & b
    if not lhs:
        return []
    rhs = ctx.revise(t, a & b).belief_worlds()
    if not rhs <= lhs:
        return [{"expansion": lhs, "conjunction_beliefs": rhs}]
    return []


@_register("CR1", "serial", "revision preserves the order among worlds satisfying the input")
def _cr1(ctx, t, a):
    return _order_flips(t, ctx.revise(t, a), a)


@_register("CR2", "serial", "revision preserves the order among worlds refuting the input")
def _cr2(ctx, t, a):
    return _order_flips(t, ctx.revise(t, a), ctx.full - a)


@_register("CR3", "serial", "a satisfying world strictly below a refuting one stays strictly below")
def _cr3(ctx, t, a):
    return _kept_below(t, ctx.revise(t, a), a, ctx.full - a, weak=False)


@_register("CR4", "serial", "a satisfying world weakly below a refuting one stays weakly below")
def _cr4(ctx, t, a):
    return _kept_below(t, ctx.revise(t, a), a, ctx.full - a, weak=True)


def _ind_expected(config) -> str:
    name = config.describe()["revision"]
    return "sound" if name in ("lex", "restrained") else "violated"


@_register("Ind", "serial",
           "a satisfying world weakly below a refuting one ends up strictly below",
           expected=_ind_expected)
def _ind(ctx, t, a):
    return _promoted(t, ctx.revise(t, a), a, ctx.full - a)


@_register("LI-serial", "serial",
           "revising equals retracting the negation then adding the input, at the belief level")
def _li_serial(ctx, t, a):
    direct = ctx.revise(t, a).belief_worlds()
    via = ctx.contract(t, ctx.full - a).belief_worlds() & a
    if direct != via:
        return [{"revision_beliefs": direct, "contract_then_add": via}]
    return []


@_register("HI-serial", "serial",
           "retracting equals keeping what survives revision by the negation, at the belief level")
def _hi_serial(ctx, t, a):
    negation = ctx.full - a
    if not negation:
        return None
    direct = ctx.contract(t, a).belief_worlds()
    via = t.belief_worlds() | ctx.revise(t, negation).belief_worlds()
    if direct != via:
        return [{"contraction_beliefs": direct, "meet_of_revisions": via}]
    return []


# --- serial contraction ---

@_register("CC1", "sercon", "contraction preserves the order among worlds refuting the input")
def _cc1(ctx, t, a):
    return _order_flips(t, ctx.contract(t, a), ctx.full - a)


@_register("CC2", "sercon", "contraction preserves the order among worlds satisfying the input")
def _cc2(ctx, t, a):
    return _order_flips(t, ctx.contract(t, a), a)


@_register("CC3", "sercon", "a refuting world strictly below a satisfying one stays strictly below")
def _cc3(ctx, t, a):
    return _kept_below(t, ctx.contract(t, a), ctx.full - a, a, weak=False)


@_register("CC4", "sercon", "a refuting world weakly below a satisfying one stays weakly below")
def _cc4(ctx, t, a):
    return _kept_below(t, ctx.contract(t, a), ctx.full - a, a, weak=True)


# --- parallel revision ---

@_register("Conj-star", "pset",
           "beliefs after revising by a set are the most plausible worlds of its conjunction")
def _conj_star(ctx, t, s):
    beliefs = ctx.previse(t, s).belief_worlds()
    expected = t.min_of(_intersect(s, ctx.full))
    if beliefs != expected:
        return [{"beliefs": beliefs, "most_plausible": expected}]
    return []


@_register("K-star-1", "pset", "set revision yields deductively closed beliefs")
def _ks1(ctx, t, s):
    ctx.previse(t, s)
    return []


@_register("K-star-2", "pset", "every member of the input set is believed afterwards")
def _ks2(ctx, t, s):
    beliefs = ctx.previse(t, s).belief_worlds()
    target = _intersect(s, ctx.full)
    if not beliefs <= target:
        return [{"beliefs": beliefs, "conjunction": target}]
    return []


@_register("K-star-3", "pset", "set revision keeps prior beliefs consistent with the set")
def _ks3(ctx, t, s):
    expansion = t.belief_worlds() & _intersect(s, ctx.full)
    beliefs = ctx.previse(t, s).belief_worlds()
    if not expansion <= beliefs:
        return [{"expansion": expansion, "beliefs": beliefs}]
    return []


@_register("K-star-4", "pset", "set revision adds nothing beyond expansion when compatible")
def _ks4(ctx, t, s):
    expansion = t.belief_worlds() & _intersect(s, ctx.full)
    if not expansion:
        return []
    beliefs = ctx.previse(t, s).belief_worlds()
    if not beliefs <= expansion:
        return [{"expansion": expansion, "beliefs": beliefs}]
    return []


@_register("K-star-5", "pset", "revising by a jointly consistent set yields consistent beliefs")
def _ks5(ctx, t, s):
    beliefs = ctx.previse(t, s).belief_worlds()
    if not beliefs:
        return [{"inputs": list(s)}]
    return []


@_register("K-star-6", "pset", "input sets with the same closure revise to the same beliefs")
def _ks6(ctx, t, s):
    reference = ctx.previse(t, s).belief_worlds()
    target = _intersect(s, ctx.full)
    variants = [(target,), tuple(reversed(s))]
    for variant in variants:
        beliefs = ctx.previse(t, variant).belief_worlds()
        if beliefs != reference:
            return [{"inputs": list(s), "variant": list(variant),
                     "beliefs": reference, "variant_beliefs": beliefs}]
    return []


@_register("K-star-6-minus", "pset",
           "member-wise equivalent input sets revise to the same beliefs")
def _ks6_minus(ctx, t, s):
    reference = ctx.previse(t, s).belief_worlds()
    variants = [s + (s[0],), tuple(reversed(s)) + (s[-1],)]
    for variant in variants:
        beliefs = ctx.previse(t, variant).belief_worlds()
        if beliefs != reference:
            return [{"inputs": list(s), "variant": list(variant),
                     "beliefs": reference, "variant_beliefs": beliefs}]
    return []


@_register("K-star-7", "pset2", "revising by a union keeps everything expansion would add")
def _ks7(ctx, t, s1, s2):
    merged = _merge(s1, s2)
    if not _intersect(merged, ctx.full):
        return None
    lhs = ctx.previse(t, s1).belief_worlds() & _intersect(s2, ctx.full)
    rhs = ctx.previse(t, merged).belief_worlds()
    if not lhs <= rhs:
        return [{"expansion": lhs, "union_beliefs": rhs}]
    return []


@_register("K-star-8", "pset2", "expansion of a set revision is conservative when consistent")
def _ks8(ctx, t, s1, s2):
    lhs = ctx.previse(t, s1).belief_worlds() & _intersect(s2, ctx.full)
    if not lhs:
        return []
    rhs = ctx.previse(t, _merge(s1, s2)).belief_worlds()
    if not rhs <= lhs:
        return [{"expansion": lhs, "union_beliefs": rhs}]
    return []


@_register("C-star-1", "pset",
           "set revision preserves the order among worlds satisfying the whole set")
def _cs1(ctx, t, s):
    return _order_flips(t, ctx.previse(t, s), _intersect(s, ctx.full))


@_register("C-star-2", "pset",
           "set revision preserves the order among worlds refuting every member")
def _cs2(ctx, t, s):
    return _order_flips(t, ctx.previse(t, s), ctx.full - _union(s))


@_register("C-star-2-plus", "pset",
           "set revision preserves the order among all worlds outside the conjunction",
           expected="violated")
def _cs2_plus(ctx, t, s):
    return _order_flips(t, ctx.previse(t, s), ctx.full - _intersect(s, ctx.full))


@_register("C-star-3", "pset",
           "a set-satisfying world strictly below an outside one stays strictly below")
def _cs3(ctx, t, s):
    target = _intersect(s, ctx.full)
    return _kept_below(t, ctx.previse(t, s), target, ctx.full - target, weak=False)


@_register("C-star-4", "pset",
           "a set-satisfying world weakly below an outside one stays weakly below")
def _cs4(ctx, t, s):
    target = _intersect(s, ctx.full)
    return _kept_below(t, ctx.previse(t, s), target, ctx.full - target, weak=True)


def _sat_profile(s: tuple[frozenset[int], ...], world: int) -> frozenset[int]:
    return frozenset(i for i, member in enumerate(s) if world in member)


@_register("PC3", "pset",
           "strictness survives when the lower world satisfies at least as much of the set")
def _pc3(ctx, t, s):
    t2 = ctx.previse(t, s)
    hits = []
    for x in range(t.num_worlds):
        sat_x = _sat_profile(s, x)
        for y in range(t.num_worlds):
            if x == y:
                continue
            if _sat_profile(s, y) <= sat_x and t.strictly_below(x, y) \
                    and not t2.strictly_below(x, y):
                hits.append({"x": x, "y": y, "prior": "<", "posterior": _sym(t2.compare(x, y))})
    return hits


@_register("PC4", "pset",
           "weak order survives when the lower world satisfies at least as much of the set")
def _pc4(ctx, t, s):
    t2 = ctx.previse(t, s)
    hits = []
    for x in range(t.num_worlds):
        sat_x = _sat_profile(s, x)
        for y in range(t.num_worlds):
            if x == y:
                continue
            if _sat_profile(s, y) <= sat_x and t.weakly_below(x, y) \
                    and not t2.weakly_below(x, y):
                hits.append({"x": x, "y": y, "prior": "<=", "posterior": ">"})
    return hits


def _ind_star_expected(config) -> str:
    names = config.describe()
    if names["base"] in ("lex", "restrained") and names["finisher"] in ("lex", "restrained"):
        return "sound"
    return "exploratory"


@_register("Ind-star", "pset",
           "a set-satisfying world weakly below an outside one ends up strictly below",
           expected=_ind_star_expected)
def _ind_star(ctx, t, s):
    target = _intersect(s, ctx.full)
    return _promoted(t, ctx.previse(t, s), target, ctx.full - target)


@_register("GR-star", "pset",
           "revising by the member-wise negations leaves the set's best worlds untouched")
def _gr_star(ctx, t, s):
    negations = tuple(ctx.full - member for member in s)
    if not _intersect(negations, ctx.full):
        return None
    target = _intersect(s, ctx.full)
    after = ctx.previse(t, negations).min_of(target)
    before = t.min_of(target)
    if after != before:
        return [{"before": before, "after": after}]
    return []


@_register("S-star", "pset2",
           "discarding one set while adopting another keeps the joint best worlds fixed")
def _s_star(ctx, t, s1, s2):
    negations = tuple(ctx.full - member for member in s2)
    mixed = _merge(s1, negations)
    if not _intersect(mixed, ctx.full):
        return None
    target = _intersect(_merge(s1, s2), ctx.full)
    before = t.min_of(target)
    after = ctx.previse(t, mixed).min_of(target)
    if before != after:
        return [{"before": before, "after": after}]
    return []


@_register("P-star", "pset2",
           "after adopting one set against another, the other's best worlds satisfy the first",
           expected="violated")
def _p_star(ctx, t, s1, s2):
    joint = _intersect(_merge(s1, s2), ctx.full)
    if not joint:
        return []
    negations = tuple(ctx.full - member for member in s2)
    mixed = _merge(s1, negations)
    if not _intersect(mixed, ctx.full):
        return None
    best = ctx.previse(t, mixed).min_of(_intersect(s2, ctx.full))
    first = _intersect(s1, ctx.full)
    if not best <= first:
        return [{"best_of_second": best, "first_conjunction": first}]
    return []


# --- parallel contraction ---

@_register("C-con-1", "cset",
           "set contraction preserves the order among worlds refuting every member")
def _ccon1(ctx, t, s):
    return _order_flips(t, ctx.pcontract(t, s), ctx.full - _union(s))


@_register("C-con-2", "cset",
           "set contraction preserves the order among worlds satisfying the whole set")
def _ccon2(ctx, t, s):
    return _order_flips(t, ctx.pcontract(t, s), _intersect(s, ctx.full))


@_register("C-con-3", "cset",
           "an all-refuting world strictly below any other stays strictly below")
def _ccon3(ctx, t, s):
    refuting = ctx.full - _union(s)
    return _kept_below(t, ctx.pcontract(t, s), refuting, ctx.full - refuting, weak=False)


@_register("C-con-4", "cset",
           "an all-refuting world weakly below any other stays weakly below")
def _ccon4(ctx, t, s):
    refuting = ctx.full - _union(s)
    return _kept_below(t, ctx.pcontract(t, s), refuting, ctx.full - refuting, weak=True)


@_register("DiP", "cset",
           "some contraction by a consistent set still believes the set's disjunction",
           kind="existential")
def _dip(ctx, t, s):
    if not _intersect(s, ctx.full):
        return None
    beliefs = ctx.pcontract(t, s).belief_worlds()
    disjunction = _union(s)
    if beliefs <= disjunction:
        return [{"beliefs": beliefs, "disjunction": disjunction}]
    return []


# --- aggregation ---

@_register("UB", "profile2",
           "aggregate best worlds never leave the union of member best worlds")
def _ub(ctx, profile):
    merged = ctx.aggregate(profile)
    hits = []
    for subset in ctx.subsets:
        combined = frozenset()
        for t in profile:
            combined |= t.min_of(subset)
        chosen = merged.min_of(subset)
        if not chosen <= combined:
            hits.append({"over": subset, "aggregate_best": chosen, "member_best_union": combined})
    return hits


@_register("LB", "profile2",
           "some member's best worlds always make it into the aggregate's")
def _lb(ctx, profile):
    merged = ctx.aggregate(profile)
    hits = []
    for subset in ctx.subsets:
        chosen = merged.min_of(subset)
        if not any(t.min_of(subset) <= chosen for t in profile):
            hits.append({"over": subset, "aggregate_best": chosen})
    return hits


@_register("SPU", "profile2", "unanimous strict preference survives aggregation")
def _spu(ctx, profile):
    merged = ctx.aggregate(profile)
    hits = []
    for x in range(merged.num_worlds):
        for y in range(merged.num_worlds):
            if x != y and all(t.strictly_below(x, y) for t in profile) \
                    and not merged.strictly_below(x, y):
                hits.append({"x": x, "y": y})
    return hits


@_register("WPU", "profile2", "unanimous weak preference survives aggregation")
def _wpu(ctx, profile):
    merged = ctx.aggregate(profile)
    hits = []
    for x in range(merged.num_worlds):
        for y in range(merged.num_worlds):
            if x != y and all(t.weakly_below(x, y) for t in profile) \
                    and not merged.weakly_below(x, y):
                hits.append({"x": x, "y": y})
    return hits


@_register("Factoring", "profile2",
           "aggregate best worlds are a union of whole member best-world sets")
def _factoring(ctx, profile):
    merged = ctx.aggregate(profile)
    indices = range(len(profile))
    hits = []
    for subset in ctx.subsets:
        chosen = merged.min_of(subset)
        mins = [t.min_of(subset) for t in profile]
        matched = False
        for size in range(len(profile) + 1):
            for group in combinations(indices, size):
                combined = frozenset()
                for j in group:
                    combined |= mins[j]
                if combined == chosen:
                    matched = True
                    break
            if matched:
                break
        if not matched:
            hits.append({"over": subset, "aggregate_best": chosen})
    return hits


def _parity_expected(config) -> str:
    return "sound" if config.describe()["strategy"] == "stq" else "exploratory"


@_register("Parity", "profile2",
           "whatever the aggregate strictly prefers, every member prefers some tied peer",
           expected=_parity_expected)
def _parity(ctx, profile):
    merged = ctx.aggregate(profile)
    worlds = range(merged.num_worlds)
    hits = []
    for x in worlds:
        peers = [z for z in worlds if merged.compare(x, z) == 0]
        for y in worlds:
            if x == y or not merged.strictly_below(x, y):
                continue
            for i, t in enumerate(profile):
                if not any(t.strictly_below(z, y) for z in peers):
                    hits.append({"x": x, "y": y, "member": profile[i]})
                    break
    return hits


# --- syntactic companion forms, used by the agreement-pair check ---
#
# Each maps (ctx, t, s) to True/False: does the follow-up-quantified
# form hold at this instance?  Follow-up inputs range over single
# consistent propositions; belief-membership quantifiers over sentences
# are evaluated exactly by working with belief-world sets.

@dataclass(frozen=True)
class SyntacticForm:
    id: str
    summary: str
    holds: Callable = field(repr=False)


SYNTACTIC_FORMS: dict[str, SyntacticForm] = {}
EQUIVALENCE_PAIRS: dict[str, str] = {
    "C-star-1": "C-star-1-b",
    "C-star-2": "C-star-2-b",
    "C-star-3": "C-star-3-b",
    "C-star-4": "C-star-4-b",
    "PC3": "PC3-b",
    "PC4": "PC4-b",
}


def _syntactic(id: str, summary: str):
    def wrap(fn):
        SYNTACTIC_FORMS[id] = SyntacticForm(id, summary, fn)
        return fn
    return wrap


def _follow_up(ctx, t: TPO, x: frozenset[int]) -> frozenset[int]:
    return ctx.previse(t, (x,)).belief_worlds()


@_syntactic("C-star-1-b",
            "follow-ups entailing the set make the revision step irrelevant")
def _syn_cs1(ctx, t, s):
    t2 = ctx.previse(t, s)
    target = _intersect(s, ctx.full)
    for x in ctx.props:
        if x <= target and _follow_up(ctx, t2, x) != _follow_up(ctx, t, x):
            return False
    return True


@_syntactic("C-star-2-b",
            "follow-ups entailing every negation make the revision step irrelevant")
def _syn_cs2(ctx, t, s):
    t2 = ctx.previse(t, s)
    refuting = ctx.full - _union(s)
    for x in ctx.props:
        if x <= refuting and _follow_up(ctx, t2, x) != _follow_up(ctx, t, x):
            return False
    return True


@_syntactic("C-star-3-b",
            "follow-ups that would leave the set believed still do after revising by it")
def _syn_cs3(ctx, t, s):
    t2 = ctx.previse(t, s)
    target = _intersect(s, ctx.full)
    for x in ctx.props:
        if _follow_up(ctx, t, x) <= target and not _follow_up(ctx, t2, x) <= target:
            return False
    return True


@_syntactic("C-star-4-b",
            "follow-ups that would leave the set consistent with beliefs still do")
def _syn_cs4(ctx, t, s):
    t2 = ctx.previse(t, s)
    target = _intersect(s, ctx.full)
    for x in ctx.props:
        if _follow_up(ctx, t, x) & target and not _follow_up(ctx, t2, x) & target:
            return False
    return True


def _subset_beliefs(ctx, t: TPO, s, x: frozenset[int]):
    """Belief worlds of revising by each subfamily of ``s`` joined with x."""
    for size in range(len(s) + 1):
        for group in combinations(range(len(s)), size):
            members = tuple(s[i] for i in group)
            merged = _merge(members, (x,))
            if _intersect(merged, ctx.full):
                yield ctx.previse(t, merged).belief_worlds()


@_syntactic("PC3-b",
            "anything believed under every compatible subfamily survives the two-step route")
def _syn_pc3(ctx, t, s):
    t2 = ctx.previse(t, s)
    for x in ctx.props:
        support = frozenset()
        for beliefs in _subset_beliefs(ctx, t, s, x):
            support |= beliefs
        if not _follow_up(ctx, t2, x) <= support:
            return False
    return True


@_syntactic("PC4-b",
            "nothing refuted under every compatible subfamily appears on the two-step route")
def _syn_pc4(ctx, t, s):
    t2 = ctx.previse(t, s)
    for x in ctx.props:
        two_step = _follow_up(ctx, t2, x)
        if not any(beliefs <= two_step for beliefs in _subset_beliefs(ctx, t, s, x)):
            return False
    return True

"""Scenario files: declarative multi-step revision runs.

A scenario is a small JSON document that fixes the vocabulary, the
initial plausibility order, the operator configuration, and a sequence
of steps (set revisions, set contractions, or single-sentence serial
operations).  Steps may attach queries; running a scenario produces a
``RunTrace`` that records the preorder, belief worlds, and query
answers after every step.  Traces serialize deterministically and can
be rendered as plain text or as a Graphviz document with one cluster
per stage.

Schema, version 1::

    {
      "version": 1,
      "atoms": ["A", "B"],
      "initial": "uniform" | [["11"], ["01", "10"], ["00"]],
      "operators": {"base": "natural", "finisher": "natural",
                    "agg": "stq", "contraction": "natural-contract"},
      "initial_queries": [ ...queries... ],
      "steps": [
        {"op": "revise-set", "sentences": ["A", "B"], "queries": [...]},
        {"op": "contract-set", "sentences": ["A & B"]},
        {"op": "serial-revise", "sentence": "~B"},
        {"op": "serial-contract", "sentence": "A"}
      ]
    }

Queries::

    {"type": "believes", "sentence": "A & B"}
    {"type": "conditional", "given": "~B", "then": "A"}
    {"type": "compare", "left": "10", "right": "01"}   # world names
    {"type": "show-tpo"}
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .aggregation import Aggregator, make_strategy
from .errors import InconsistentInputError, ScenarioError
from .logic import Formula, Language, models, parse_formula
from .parallel import ParallelContractionOperator, ParallelRevisionOperator
from .serial import (SerialContractionOperator, SerialRevisionOperator,
                     get_contraction_operator, get_revision_operator)
from .tpo import TPO

SCHEMA_VERSION = 1

_SET_OPS = ("revise-set", "contract-set")
_SERIAL_OPS = ("serial-revise", "serial-contract")
_QUERY_TYPES = ("believes", "conditional", "compare", "show-tpo")

_OPERATOR_KEYS = ("base", "finisher", "agg", "contraction")
_OPERATOR_DEFAULTS = {
    "base": "natural",
    "finisher": "natural",
    "agg": "stq",
    "contraction": "natural-contract",
}


def _expect(condition: bool, where: str, message: str) -> None:
    if not condition:
        raise ScenarioError(f"{where}: {message}")


def _parse_sentence(text, lang: Language, where: str) -> Formula:
    _expect(isinstance(text, str), where, f"expected a sentence string, got {text!r}")
    try:
        return parse_formula(text, lang)
    except Exception as exc:
        raise ScenarioError(f"{where}: {exc}") from exc


def _validate_query(query, lang: Language, where: str) -> dict:
    _expect(isinstance(query, dict), where, "each query must be an object")
    kind = query.get("type")
    _expect(kind in _QUERY_TYPES, where,
            f"unknown query type {kind!r} (expected one of {', '.join(_QUERY_TYPES)})")
    out = {"type": kind}
    if kind == "believes":
        out["sentence"] = query.get("sentence")
        out["_formula"] = _parse_sentence(out["sentence"], lang, where)
    elif kind == "conditional":
        out["given"] = query.get("given")
        out["then"] = query.get("then")
        out["_given"] = _parse_sentence(out["given"], lang, f"{where} (given)")
        out["_then"] = _parse_sentence(out["then"], lang, f"{where} (then)")
    elif kind == "compare":
        for side in ("left", "right"):
            name = query.get(side)
            _expect(isinstance(name, str), where, f"compare query needs a {side!r} world name")
            try:
                out[side] = lang.world_from_name(name)
            except Exception as exc:
                raise ScenarioError(f"{where}: {exc}") from exc
            out[f"{side}_name"] = name
    return out


@dataclass(frozen=True)
class Step:
    op: str
    texts: tuple[str, ...]
    formulas: tuple[Formula, ...]
    queries: tuple[dict, ...]

    def label(self) -> str:
        if self.op in _SET_OPS:
            return f"{self.op} {{{', '.join(self.texts)}}}"
        return f"{self.op} {self.texts[0]}"


@dataclass(frozen=True)
class Scenario:
    """A validated scenario document with all sentences pre-parsed."""

    lang: Language
    initial: TPO
    base: SerialRevisionOperator
    finisher: SerialRevisionOperator
    contraction: SerialContractionOperator
    aggregator: Aggregator
    initial_queries: tuple[dict, ...]
    steps: tuple[Step, ...]
    raw: dict

    @classmethod
    def from_dict(cls, data) -> "Scenario":
        _expect(isinstance(data, dict), "scenario", "document root must be an object")
        version = data.get("version")
        _expect(version == SCHEMA_VERSION, "scenario",
                f"unsupported version {version!r} (expected {SCHEMA_VERSION})")

        atoms = data.get("atoms")
        _expect(isinstance(atoms, list) and atoms, "scenario", "'atoms' must be a non-empty list")
        try:
            lang = Language(tuple(atoms))
        except Exception as exc:
            raise ScenarioError(f"scenario: {exc}") from exc

        initial = data.get("initial", "uniform")
        if initial == "uniform":
            start = TPO.uniform(lang.num_worlds)
        else:
            _expect(isinstance(initial, list), "initial",
                    "must be \"uniform\" or a list of world-name blocks")
            try:
                blocks = tuple(
                    frozenset(lang.world_from_name(n) for n in block) for block in initial)
                start = TPO(blocks)
            except ScenarioError:
                raise
            except Exception as exc:
                raise ScenarioError(f"initial: {exc}") from exc

        ops = data.get("operators", {})
        _expect(isinstance(ops, dict), "operators", "must be an object")
        unknown = set(ops) - set(_OPERATOR_KEYS)
        _expect(not unknown, "operators", f"unknown keys {sorted(unknown)}")
        names = {**_OPERATOR_DEFAULTS, **ops}
        try:
            base = get_revision_operator(names["base"])
            finisher = get_revision_operator(names["finisher"])
            contraction = get_contraction_operator(names["contraction"])
            aggregator = Aggregator(make_strategy(names["agg"]))
        except Exception as exc:
            raise ScenarioError(f"operators: {exc}") from exc

        initial_queries = tuple(
            _validate_query(q, lang, f"initial_queries[{i}]")
            for i, q in enumerate(data.get("initial_queries", [])))

        raw_steps = data.get("steps", [])
        _expect(isinstance(raw_steps, list), "scenario", "'steps' must be a list")
        steps = []
        for i, raw in enumerate(raw_steps):
            where = f"steps[{i}]"
            _expect(isinstance(raw, dict), where, "each step must be an object")
            op = raw.get("op")
            _expect(op in _SET_OPS + _SERIAL_OPS, where,
                    f"unknown op {op!r} (expected one of "
                    f"{', '.join(_SET_OPS + _SERIAL_OPS)})")
            if op in _SET_OPS:
                sentences = raw.get("sentences")
                _expect(isinstance(sentences, list) and sentences, where,
                        "'sentences' must be a non-empty list")
                texts = tuple(sentences)
                formulas = tuple(
                    _parse_sentence(s, lang, f"{where}.sentences[{j}]")
                    for j, s in enumerate(sentences))
            else:
                text = raw.get("sentence")
                texts = (text,)
                formulas = (_parse_sentence(text, lang, f"{where}.sentence"),)
            queries = tuple(
                _validate_query(q, lang, f"{where}.queries[{j}]")
                for j, q in enumerate(raw.get("queries", [])))
            steps.append(Step(op=op, texts=texts, formulas=formulas, queries=queries))

        return cls(lang=lang, initial=start, base=base, finisher=finisher,
                   contraction=contraction, aggregator=aggregator,
                   initial_queries=initial_queries, steps=tuple(steps), raw=data)


def load_scenario(path) -> Scenario:
    """Read and validate a scenario JSON file."""
    text = Path(path).read_text(encoding="utf-8")
    return loads_scenario(text)


def loads_scenario(text: str) -> Scenario:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ScenarioError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return Scenario.from_dict(data)


def _answer(query: dict, t: TPO, lang: Language) -> dict:
    kind = query["type"]
    if kind == "believes":
        ws = models(query["_formula"], lang)
        return {"type": kind, "sentence": query["sentence"],
                "answer": t.believes(ws)}
    if kind == "conditional":
        given = models(query["_given"], lang)
        then = models(query["_then"], lang)
        return {"type": kind, "given": query["given"], "then": query["then"],
                "answer": t.min_of(given) <= then}
    if kind == "compare":
        diff = t.compare(query["left"], query["right"])
        relation = "<" if diff < 0 else (">" if diff > 0 else "~")
        return {"type": kind, "left": query["left_name"],
                "right": query["right_name"], "answer": relation}
    return {"type": kind, "answer": t.render(lang)}


@dataclass(frozen=True)
class TraceEntry:
    label: str
    tpo: TPO
    answers: tuple[dict, ...]

    def beliefs(self) -> frozenset[int]:
        return self.tpo.belief_worlds()


@dataclass(frozen=True)
class RunTrace:
    """Everything a scenario run produced, stage by stage.

    Entry 0 is the initial state; entry i is the state after step i.
    The original scenario document rides along so a trace can be
    re-run (``replay``) and byte-compared.
    """

    scenario: dict
    lang: Language
    entries: tuple[TraceEntry, ...]

    def final(self) -> TraceEntry:
        return self.entries[-1]

    def to_json_dict(self) -> dict:
        return {
            "scenario": self.scenario,
            "entries": [
                {
                    "label": e.label,
                    "tpo": [sorted(self.lang.world_name(w) for w in block)
                            for block in e.tpo.blocks],
                    "beliefs": sorted(self.lang.world_name(w) for w in e.beliefs()),
                    "queries": list(e.answers),
                }
                for e in self.entries
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = []
        for e in self.entries:
            lines.append(f"{e.label}: {e.tpo.render(self.lang)}")
            beliefs = ", ".join(sorted(self.lang.world_name(w) for w in e.beliefs()))
            lines.append(f"  beliefs: {{{beliefs}}}")
            for ans in e.answers:
                lines.append(f"  {_format_answer(ans)}")
        return "\n".join(lines)

    def replay(self) -> "RunTrace":
        return run_scenario(Scenario.from_dict(self.scenario))


def _format_answer(ans: dict) -> str:
    kind = ans["type"]
    if kind == "believes":
        return f"believes {ans['sentence']}? {'yes' if ans['answer'] else 'no'}"
    if kind == "conditional":
        verdict = "yes" if ans["answer"] else "no"
        return f"on condition {ans['given']}, believes {ans['then']}? {verdict}"
    if kind == "compare":
        return f"compare {ans['left']} {ans['answer']} {ans['right']}"
    return f"order: {ans['answer']}"


def run_scenario(scenario: Scenario) -> RunTrace:
    """Execute every step and answer every query along the way."""
    lang = scenario.lang
    prev = ParallelRevisionOperator(scenario.base, scenario.finisher, scenario.aggregator)
    pcon = ParallelContractionOperator(scenario.contraction, scenario.aggregator)

    t = scenario.initial
    entries = [TraceEntry(
        label="initial", tpo=t,
        answers=tuple(_answer(q, t, lang) for q in scenario.initial_queries))]

    for i, step in enumerate(scenario.steps, start=1):
        sets = tuple(models(f, lang) for f in step.formulas)
        try:
            if step.op == "revise-set":
                t = prev.revise_worlds(t, sets, labels=step.texts)
            elif step.op == "contract-set":
                t = pcon.contract_worlds(t, sets)
            elif step.op == "serial-revise":
                t = scenario.base.revise(t, sets[0])
            else:
                t = scenario.contraction.contract(t, sets[0])
        except InconsistentInputError as exc:
            raise InconsistentInputError(f"step {i} ({step.label()}): {exc}") from exc
        entries.append(TraceEntry(
            label=f"step {i}: {step.label()}", tpo=t,
            answers=tuple(_answer(q, t, lang) for q in step.queries)))

    return RunTrace(scenario=scenario.raw, lang=lang, entries=tuple(entries))


def export_dot(trace: RunTrace, graph_name: str = "trace") -> str:
    """Render a trace as a Graphviz digraph, one cluster per stage.

    Within a cluster, worlds sit on one rank per plausibility block and
    every world points at every world in the next more plausible block,
    so the drawing reads bottom-up from least to most plausible.
    """
    lang = trace.lang
    out = [f"digraph {graph_name} {{", "  rankdir=BT;",
           "  node [shape=box, fontname=\"monospace\"];"]
    for i, e in enumerate(trace.entries):
        names = [sorted(lang.world_name(w) for w in block) for block in e.tpo.blocks]
        out.append(f"  subgraph cluster_{i} {{")
        out.append(f"    label=\"{e.label}\";")
        for j, block in enumerate(names):
            members = " ".join(f"\"s{i}_{n}\"" for n in block)
            out.append(f"    {{ rank=same; {members} }}")
            for n in block:
                out.append(f"    \"s{i}_{n}\" [label=\"{n}\"];")
        for j in range(len(names) - 1, 0, -1):
            for lower in names[j]:
                for upper in names[j - 1]:
                    out.append(f"    \"s{i}_{lower}\" -> \"s{i}_{upper}\";")
        out.append("  }")
    out.append("}")
    return "\n".join(out) + "\n"

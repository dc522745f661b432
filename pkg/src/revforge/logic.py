"""Finite propositional logic over a fixed set of atoms.

A ``Language`` fixes an ordered tuple of atom names.  A world is a truth
assignment to those atoms, encoded as an integer index in
``range(2 ** len(atoms))``; the first atom corresponds to the most
significant bit, so the bit-string rendering of a world reads off the
atoms left to right (``"10"`` over atoms ``(A, B)`` makes A true and B
false).  Propositions are sets of worlds (``frozenset[int]``).

Formulas are immutable trees built from atoms, negation, conjunction,
disjunction, implication, biconditional, and the constants verum and
falsum.  ``parse_formula`` reads the ASCII syntax ``~ & | -> <->`` with
``T``/``F`` for the constants; ``str()`` pretty-prints with minimal
parentheses, and parse -> print -> parse is a fixpoint.

``models`` computes a formula's proposition by structural set algebra;
``evaluate`` decides a single world truth-functionally.  The two routes
are independent on purpose so tests can cross-validate them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import LanguageError, ParseError

MAX_ATOMS = 16

_ATOM_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")
_RESERVED_NAMES = frozenset({"T", "F"})


class Language:
    """An ordered collection of distinct atom names."""

    def __init__(self, atoms: Iterable[str]):
        names = tuple(atoms)
        if not 1 <= len(names) <= MAX_ATOMS:
            raise LanguageError(f"need between 1 and {MAX_ATOMS} atoms, got {len(names)}")
        seen = set()
        for name in names:
            if not _ATOM_NAME.match(name):
                raise LanguageError(f"bad atom name {name!r}")
            if name in _RESERVED_NAMES:
                raise LanguageError(f"atom name {name!r} is reserved for a constant")
            if name in seen:
                raise LanguageError(f"duplicate atom name {name!r}")
            seen.add(name)
        self.atoms = names
        self._index = {name: i for i, name in enumerate(names)}

    @property
    def num_worlds(self) -> int:
        return 1 << len(self.atoms)

    def worlds(self) -> range:
        return range(self.num_worlds)

    @property
    def all_worlds(self) -> frozenset[int]:
        return frozenset(self.worlds())

    def atom_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise LanguageError(f"unknown atom {name!r}") from None

    def holds_at(self, world: int, atom: str) -> bool:
        """Truth value of ``atom`` at ``world``."""
        if not 0 <= world < self.num_worlds:
            raise LanguageError(f"world {world} outside range({self.num_worlds})")
        shift = len(self.atoms) - 1 - self.atom_index(atom)
        return bool((world >> shift) & 1)

    def world_name(self, world: int) -> str:
        """Bit-string rendering, first atom leftmost."""
        if not 0 <= world < self.num_worlds:
            raise LanguageError(f"world {world} outside range({self.num_worlds})")
        return format(world, f"0{len(self.atoms)}b")

    def world_from_name(self, name: str) -> int:
        if len(name) != len(self.atoms) or any(c not in "01" for c in name):
            raise LanguageError(f"world name {name!r} is not a {len(self.atoms)}-bit string")
        return int(name, 2)

    def __repr__(self) -> str:
        return f"Language({', '.join(self.atoms)})"


# --- formula trees ---

class Formula:
    """Base class for all formula nodes."""

    __slots__ = ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Not(Formula):
    operand: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Verum(Formula):
    pass


@dataclass(frozen=True)
class Falsum(Formula):
    pass


TOP = Verum()
BOTTOM = Falsum()


def atoms_of(formula: Formula) -> frozenset[str]:
    """The set of atom names occurring in ``formula``."""
    if isinstance(formula, Atom):
        return frozenset({formula.name})
    if isinstance(formula, Not):
        return atoms_of(formula.operand)
    if isinstance(formula, (And, Or, Implies, Iff)):
        return atoms_of(formula.left) | atoms_of(formula.right)
    return frozenset()


# --- parsing ---

_TOKEN = re.compile(
    r"\s*(?:(?P<name>[A-Za-z][A-Za-z0-9_]*)"
    r"|(?P<op><->|->|~|&|\|)"
    r"|(?P<lparen>\()"
    r"|(?P<rparen>\)))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ParseError(f"unexpected character {stripped[0]!r}", len(text) - len(stripped))
        kind = match.lastgroup
        value = match.group(kind)
        tokens.append((kind, value, match.start(kind)))
        pos = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    """Recursive descent over the grammar, loosest binder first.

    Precedence, tightest to loosest: ~  &  |  ->  <->.  Both arrows are
    right-associative; & and | associate to the left.
    """

    def __init__(self, text: str, lang: Language):
        self.tokens = _tokenize(text)
        self.lang = lang
        self.pos = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def take(self) -> tuple[str, str, int]:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect_op(self, value: str) -> bool:
        kind, tok, _ = self.peek()
        if kind == "op" and tok == value:
            self.take()
            return True
        return False

    def parse(self) -> Formula:
        formula = self.iff()
        kind, tok, at = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected {tok!r}", at)
        return formula

    def iff(self) -> Formula:
        left = self.implies()
        if self.expect_op("<->"):
            return Iff(left, self.iff())
        return left

    def implies(self) -> Formula:
        left = self.disjunction()
        if self.expect_op("->"):
            return Implies(left, self.implies())
        return left

    def disjunction(self) -> Formula:
        formula = self.conjunction()
        while self.expect_op("|"):
            formula = Or(formula, self.conjunction())
        return formula

    def conjunction(self) -> Formula:
        formula = self.unary()
        while self.expect_op("&"):
            formula = And(formula, self.unary())
        return formula

    def unary(self) -> Formula:
        kind, tok, at = self.peek()
        if kind == "op" and tok == "~":
            self.take()
            return Not(self.unary())
        return self.primary()

    def primary(self) -> Formula:
        kind, tok, at = self.take()
        if kind == "name":
            if tok == "T":
                return TOP
            if tok == "F":
                return BOTTOM
            if tok not in self.lang._index:
                raise ParseError(f"unknown atom {tok!r}", at)
            return Atom(tok)
        if kind == "lparen":
            formula = self.iff()
            kind, tok, at = self.take()
            if kind != "rparen":
                raise ParseError("expected ')'", at)
            return formula
        raise ParseError(f"expected a formula, found {tok!r}" if tok else "unexpected end of input", at)


def parse_formula(text: str, lang: Language) -> Formula:
    """Parse formula text against ``lang``, rejecting unknown atoms."""
    return _Parser(text, lang).parse()


# --- pretty printing ---

_PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
_SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}


def _prec(formula: Formula) -> int:
    return _PREC.get(type(formula), 6)


def format_formula(formula: Formula) -> str:
    """Render with the fewest parentheses that survive re-parsing."""
    if isinstance(formula, Atom):
        return formula.name
    if isinstance(formula, Verum):
        return "T"
    if isinstance(formula, Falsum):
        return "F"
    if isinstance(formula, Not):
        inner = format_formula(formula.operand)
        if _prec(formula.operand) < _PREC[Not]:
            inner = f"({inner})"
        return f"~{inner}"
    prec = _prec(formula)
    symbol = _SYMBOL[type(formula)]
    left, right = format_formula(formula.left), format_formula(formula.right)
    if isinstance(formula, (And, Or)):
        # left-associative: parenthesize an equal-precedence right child
        if _prec(formula.left) < prec:
            left = f"({left})"
        if _prec(formula.right) <= prec:
            right = f"({right})"
    else:
        # right-associative: parenthesize an equal-precedence left child
        if _prec(formula.left) <= prec:
            left = f"({left})"
        if _prec(formula.right) < prec:
            right = f"({right})"
    return f"{left} {symbol} {right}"


# --- semantics ---

def evaluate(formula: Formula, world: int, lang: Language) -> bool:
    """Truth value of ``formula`` at a single world."""
    if isinstance(formula, Atom):
        return lang.holds_at(world, formula.name)
    if isinstance(formula, Not):
        return not evaluate(formula.operand, world, lang)
    if isinstance(formula, And):
        return evaluate(formula.left, world, lang) and evaluate(formula.right, world, lang)
    if isinstance(formula, Or):
        return evaluate(formula.left, world, lang) or evaluate(formula.right, world, lang)
    if isinstance(formula, Implies):
        return (not evaluate(formula.left, world, lang)) or evaluate(formula.right, world, lang)
    if isinstance(formula, Iff):
        return evaluate(formula.left, world, lang) == evaluate(formula.right, world, lang)
    if isinstance(formula, Verum):
        return True
    if isinstance(formula, Falsum):
        return False
    raise TypeError(f"not a formula: {formula!r}")


def models(formula: Formula, lang: Language) -> frozenset[int]:
    """The proposition expressed by ``formula``: its set of worlds.

    Computed by structural set algebra rather than per-world evaluation.
    """
    if isinstance(formula, Atom):
        shift = len(lang.atoms) - 1 - lang.atom_index(formula.name)
        return frozenset(w for w in lang.worlds() if (w >> shift) & 1)
    if isinstance(formula, Not):
        return lang.all_worlds - models(formula.operand, lang)
    if isinstance(formula, And):
        return models(formula.left, lang) & models(formula.right, lang)
    if isinstance(formula, Or):
        return models(formula.left, lang) | models(formula.right, lang)
    if isinstance(formula, Implies):
        return (lang.all_worlds - models(formula.left, lang)) | models(formula.right, lang)
    if isinstance(formula, Iff):
        left, right = models(formula.left, lang), models(formula.right, lang)
        return (left & right) | (lang.all_worlds - left - right)
    if isinstance(formula, Verum):
        return lang.all_worlds
    if isinstance(formula, Falsum):
        return frozenset()
    raise TypeError(f"not a formula: {formula!r}")


def is_consistent(formula: Formula, lang: Language) -> bool:
    return bool(models(formula, lang))


def entails(premise: Formula, conclusion: Formula, lang: Language) -> bool:
    return models(premise, lang) <= models(conclusion, lang)


def canonical_formula(worlds: frozenset[int] | set[int], lang: Language) -> Formula:
    """A formula whose models are exactly ``worlds``.

    Disjunction of one conjunction of literals per world; T for the full
    set, F for the empty one.
    """
    worlds = frozenset(worlds)
    if worlds == lang.all_worlds:
        return TOP
    if not worlds:
        return BOTTOM
    disjuncts = []
    for world in sorted(worlds):
        literals: list[Formula] = []
        for name in lang.atoms:
            atom = Atom(name)
            literals.append(atom if lang.holds_at(world, name) else Not(atom))
        term = literals[0]
        for lit in literals[1:]:
            term = And(term, lit)
        disjuncts.append(term)
    formula = disjuncts[0]
    for term in disjuncts[1:]:
        formula = Or(formula, term)
    return formula


# --- finite sets of formulas ---

class FormulaSet:
    """A finite set of formulas with a stable member order.

    Members are deduplicated under syntactic (structural) equality only;
    semantically equal but syntactically distinct members are kept, and
    the insertion order of first occurrences is preserved.  The order is
    what downstream consumers treat as the set's indexing.
    """

    def __init__(self, lang: Language, members: Iterable[Formula] = ()):
        self.lang = lang
        seen: list[Formula] = []
        for member in members:
            if not isinstance(member, Formula):
                raise TypeError(f"not a formula: {member!r}")
            if member not in seen:
                seen.append(member)
        self.members = tuple(seen)

    @classmethod
    def parse(cls, texts: Iterable[str], lang: Language) -> "FormulaSet":
        return cls(lang, (parse_formula(text, lang) for text in texts))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, formula: Formula) -> bool:
        return formula in self.members

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormulaSet) and self.members == other.members

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"FormulaSet({{{', '.join(str(m) for m in self.members)}}})"

    def union(self, other: "FormulaSet") -> "FormulaSet":
        if other.lang is not self.lang and other.lang.atoms != self.lang.atoms:
            raise LanguageError("cannot union formula sets over different languages")
        return FormulaSet(self.lang, self.members + other.members)

    def model_sets(self) -> tuple[frozenset[int], ...]:
        """Per-member propositions, in member order."""
        return tuple(models(member, self.lang) for member in self.members)


def conj(s: FormulaSet) -> Formula:
    """Conjunction of all members; T for the empty set."""
    if not s.members:
        return TOP
    formula = s.members[0]
    for member in s.members[1:]:
        formula = And(formula, member)
    return formula


def neg_set(s: FormulaSet) -> FormulaSet:
    """Member-wise negation, preserving order."""
    return FormulaSet(s.lang, (Not(member) for member in s.members))


def sat_subset(s: FormulaSet, world: int) -> FormulaSet:
    """The members of ``s`` true at ``world``."""
    return FormulaSet(s.lang, (m for m in s.members if evaluate(m, world, s.lang)))


def cn_equal(s1: FormulaSet, s2: FormulaSet) -> bool:
    """Whether two formula sets have the same deductive closure."""
    return models(conj(s1), s1.lang) == models(conj(s2), s2.lang)

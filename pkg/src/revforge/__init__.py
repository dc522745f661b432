"""revforge: a workbench for iterated parallel belief revision.

Plausibility states are total preorders over propositional worlds,
stored as ordered partitions.  Serial operators (natural, lexicographic,
restrained) revise or contract by a single input; parallel operators
take a finite set of inputs at once by revising per input, merging the
results with a team-queue strategy, and finishing on the conjunction.
The postulates package sweeps a catalog of rationality principles over
exhaustive or sampled instance spaces and reports replayable
countermodels.
"""

from .aggregation import (Aggregator, FIRST_THEN_FULL_STRATEGY, ROUND_ROBIN_STRATEGY,
                          STQ_STRATEGY, STRATEGIES, SelectionStrategy, aggregate,
                          make_strategy, register_strategy, stq)
from .errors import (InconsistentInputError, LanguageError, ParseError,
                     PartitionError, RevforgeError, ScenarioError, SpaceError,
                     UnknownOperatorError, UnknownPostulateError,
                     UnsatisfiableConditionalsError)
from .logic import (BOTTOM, TOP, Formula, FormulaSet, Language, atoms_of,
                    canonical_formula, cn_equal, conj, entails, evaluate,
                    format_formula, is_consistent, models, neg_set,
                    parse_formula, sat_subset)
from .parallel import (ParallelContractionOperator, ParallelRevisionOperator,
                       default_parallel_contraction, default_parallel_revision,
                       harper_parallel_beliefs, levi_parallel_beliefs,
                       minimal_inconsistent_indices, parallel_contract,
                       parallel_revise, parse_operator_config)
from .postulates import (CATALOG, CheckContext, CheckReport, EQUIVALENCE_PAIRS,
                         InstanceSpace, OperatorConfig, check,
                         check_equivalence_pair, find_countermodel,
                         replay_witness, verify_rc_identity)
from .scenario import (RunTrace, Scenario, export_dot, load_scenario,
                       loads_scenario, run_scenario)
from .serial import (CONTRACTION_OPERATORS, LEX, NATURAL, NATURAL_CONTRACT,
                     RESTRAINED, REVISION_OPERATORS, SerialContractionOperator,
                     SerialRevisionOperator, get_contraction_operator,
                     get_revision_operator, lex_revise, natural_contract,
                     natural_revise, register_contraction_operator,
                     register_revision_operator, restrained_revise)
from .tpo import (ConditionalSet, TPO, conditional_set, intersect_conditionals,
                  rational_closure)

__version__ = "0.1.0"

__all__ = [
    "Aggregator", "BOTTOM", "CATALOG", "CONTRACTION_OPERATORS", "CheckContext",
    "CheckReport", "ConditionalSet", "EQUIVALENCE_PAIRS",
    "FIRST_THEN_FULL_STRATEGY", "Formula", "FormulaSet",
    "InconsistentInputError", "InstanceSpace", "LEX", "Language",
    "LanguageError", "NATURAL", "NATURAL_CONTRACT", "OperatorConfig",
    "ParallelContractionOperator", "ParallelRevisionOperator", "ParseError",
    "PartitionError", "RESTRAINED", "REVISION_OPERATORS",
    "ROUND_ROBIN_STRATEGY", "RevforgeError", "RunTrace", "STQ_STRATEGY",
    "STRATEGIES", "Scenario", "ScenarioError", "SelectionStrategy",
    "SerialContractionOperator", "SerialRevisionOperator", "SpaceError", "TOP",
    "TPO", "UnknownOperatorError", "UnknownPostulateError",
    "UnsatisfiableConditionalsError", "aggregate", "atoms_of",
    "canonical_formula", "check", "check_equivalence_pair", "cn_equal", "conditional_set",
    "conj", "default_parallel_contraction", "default_parallel_revision",
    "entails", "evaluate", "export_dot", "find_countermodel", "format_formula",
    "get_contraction_operator", "get_revision_operator",
    "harper_parallel_beliefs", "intersect_conditionals", "is_consistent",
    "levi_parallel_beliefs", "lex_revise", "load_scenario", "loads_scenario",
    "make_strategy", "minimal_inconsistent_indices", "models",
    "natural_contract", "natural_revise", "neg_set", "parallel_contract",
    "parallel_revise", "parse_formula", "parse_operator_config",
    "rational_closure", "register_contraction_operator",
    "register_revision_operator", "register_strategy", "replay_witness",
    "restrained_revise", "run_scenario", "sat_subset", "stq",
    "verify_rc_identity",
]

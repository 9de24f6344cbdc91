"""Fourier expansion of word-map distributions on finite groups."""

from ._kernels import active_backend
from .analysis import OccurrenceProfile, classify
from .chartable import (
    CharacterTable,
    builtin_table,
    compute_character_table,
    fs_indicator,
    load_character_table,
    save_character_table,
)
from .errors import (
    BudgetExceededError,
    CharacterComputationError,
    GroupValidationError,
    ReductionError,
    TableValidationError,
    WordSyntaxError,
)
from .fourier import (
    ClassFunction,
    DEFAULT_BUDGET,
    FourierExpansion,
    coefficient_formula,
    commutator_with_fresh,
    convolve,
    disjoint_product_coeff,
    distribution,
    expansion_from_form,
    inverse_coeff,
    nested_commutator_coeff,
    project,
    quartic_pair_coeff,
)
from .groups import (
    ConjugacyClasses,
    FiniteGroup,
    builtin_group,
    builtin_names,
    conjugacy_classes,
    group_from_generators,
    load_group,
    perm_from_cycles,
    save_group,
)
from .reduction import (
    ReducedForm,
    SplitDecomposition,
    closed_form_str,
    eliminate_single,
    format_trace,
    genus,
    normalize,
    prefactor_str,
    split_dismissible,
    split_tambour,
    square_reduce,
)
from .words import (
    Alphabet,
    Word,
    concat,
    cyclic_shift,
    evaluate,
    empty_word,
    free_reduce,
    invert,
    parse_word,
    word_to_str,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "BudgetExceededError",
    "CharacterComputationError",
    "CharacterTable",
    "ClassFunction",
    "ConjugacyClasses",
    "DEFAULT_BUDGET",
    "FiniteGroup",
    "FourierExpansion",
    "GroupValidationError",
    "OccurrenceProfile",
    "ReducedForm",
    "ReductionError",
    "SplitDecomposition",
    "TableValidationError",
    "Word",
    "WordSyntaxError",
    "active_backend",
    "builtin_group",
    "builtin_names",
    "builtin_table",
    "classify",
    "closed_form_str",
    "coefficient_formula",
    "commutator_with_fresh",
    "compute_character_table",
    "concat",
    "conjugacy_classes",
    "convolve",
    "cyclic_shift",
    "disjoint_product_coeff",
    "distribution",
    "eliminate_single",
    "empty_word",
    "evaluate",
    "expansion_from_form",
    "format_trace",
    "free_reduce",
    "fs_indicator",
    "genus",
    "group_from_generators",
    "inverse_coeff",
    "invert",
    "load_character_table",
    "load_group",
    "nested_commutator_coeff",
    "normalize",
    "parse_word",
    "perm_from_cycles",
    "prefactor_str",
    "project",
    "quartic_pair_coeff",
    "save_character_table",
    "save_group",
    "split_dismissible",
    "split_tambour",
    "square_reduce",
    "word_to_str",
]

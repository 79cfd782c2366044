"""Thue-Morse and derived sequences: generators, repetition detection,
and finite-window recurrence diagnostics."""

from .words import (
    IntegrityError,
    LanguageSet,
    OccurrenceList,
    UsageError,
    Word,
    complement,
    factor_set,
    occurrences,
    relabel,
    right_special_census,
    subword_complexity,
)
from .thue_morse import (
    FlipSeed,
    LookalikeOccurrence,
    PartitionView,
    classify_lookalikes,
    definitions_agree,
    lookalike_audit,
    mirror_block_audit,
    mirror_positions,
    partition_block,
    partition_decompose,
    seeded_flip_prefix,
    tm_prefix_flip,
    tm_prefix_morphism,
    tm_prefix_recursive,
    tm_prefix_termwise,
    tm_term,
)
from .derived import (
    RunLengthProfile,
    SequenceSpec,
    alpha_prefix,
    beta_prefix,
    method_a_encode,
    run_length_profile,
    theta_prefix,
    theta_to_tm,
    v_prefix,
    vartheta_prefix,
    vartheta_to_tm,
    w_prefix,
)
from .repetitions import (
    RepetitionReport,
    SquareWitness,
    TMSquareCensus,
    classify_tm_squares,
    check_no_overlapping_occurrences,
    find_square_naive,
    find_squares_all,
    is_cube_free,
    is_cube_free_naive,
    is_overlap_free,
    is_overlap_free_naive,
    leftmost_square,
    max_power,
    maximal_runs,
)
from .dynamics import (
    GapReport,
    RecurrenceReport,
    language_disjointness,
    occurrence_gaps,
    periodicity_witness,
    relative_density_check,
    uniform_recurrence_bound,
)
from .method_b import (
    KappaLayout,
    MethodBConfig,
    decode_section,
    encode_block,
    enumerate_blocks,
    kappa_layout,
    kappa_prefix,
)

__version__ = "0.1.0"

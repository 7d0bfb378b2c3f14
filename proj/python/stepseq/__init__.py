"""Stepping sequences through nested set chains and the Gray codes they induce."""

from ._stepseq import (  # noqa: F401
    BudgetExhaustedError,
    CensusM4,
    DifferenceSequence,
    FailureReason,
    Filter,
    ForCStream,
    ForJStream,
    GrayOrdering,
    KSubsetOrdering,
    Mode,
    MoveStream,
    NestingViolation,
    ParseError,
    ResourceLimitError,
    SearchResult,
    SteppingSequence,
    VerificationReport,
    a6,
    apply_move,
    brgc,
    census_m4,
    combine_first,
    combine_second,
    commutations,
    complement,
    enumerate,
    format_mask_binary,
    format_moves,
    format_subset,
    greedy,
    hamming_weight,
    humble,
    is_contiguous,
    is_cyclic_gray,
    is_strongly_contiguous,
    is_well_formed,
    nesting_violation,
    new_chain,
    occurrence_profile,
    orbit_closure,
    parity_check,
    parse_moves,
    recursive_r,
    restrict_to_k,
    reverse,
    stepping_length,
    stream_for_c,
    stream_for_j,
    subset_at,
    to_ordering,
    v2,
    verify,
    DEFAULT_MATERIALIZE_LIMIT,
    DEFAULT_VERIFY_LIMIT,
    __version__,
)

"""Palintiples: numbers that are integer multiples of their digit reversal."""

from .digits import (
    CarrySequence,
    DigitString,
    PalintipleClass,
    PalintipleRecord,
    classify_carries,
    concatenate,
    digits_from_carries,
    reverse_digits,
    schoolbook_multiply,
    verify_palintiple,
)
from .errors import (
    BadParameters,
    CarryNotMultiple,
    CheckpointCorrupt,
    DigitOutOfRange,
    InvalidRSequence,
    LeadingZero,
    NonIntegralDigit,
    NotAMultiple,
    NotDivisible,
    PalintipleError,
)
from .graph import (
    CarryPairGraph,
    EdgeLabel,
    Node,
    accept_odd,
    build_graph,
    digraph_isomorphic,
    edge_digits,
    enumerate_palintiples,
    is_1089_type,
    min_digits,
    palintiples_exist,
    trim_graph,
)
from .theory import (
    PairClass,
    RSequence,
    build_shifted_symmetric,
    choose_n_for_composite,
    congruence_solutions,
    enumerate_r_sequences,
    generate_symmetric,
    pair_class,
    recover_r_sequence,
)

__version__ = "0.1.0"

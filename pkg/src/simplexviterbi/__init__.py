"""Encoding and maximum-likelihood decoding of binary k-partial simplex
convolutional codes, with a Viterbi variant whose branch metrics come from
fast Hadamard transforms."""

from .block_codes import (
    BlockCode,
    CodewordEnumeration,
    combo_lex_rank,
    enumerate_codewords,
    partial_simplex_generator,
    reed_muller_generator,
    simplex_generator,
)
from .channel_bench import ChannelConfig, bsc_transmit, inject_errors, run_bench
from .convolutional import (
    MessageSequence,
    PolyCodeword,
    PolyGeneratorMatrix,
    column_distance,
    encode,
    free_distance_estimate,
    optimal_column_distance,
    partial_simplex_conv_generator,
    row_degrees,
)
from .f2core import (
    BinaryMatrix,
    BinaryVector,
    BipolarVector,
    distance_from_inner_product,
    f2_matvec,
    from_bipolar,
    hamming_distance,
    inner_product,
    to_bipolar,
    weight,
)
from .hadamard import (
    branch_distance_profile,
    build_Hhat,
    build_Htilde,
    build_Q,
    build_T,
    faro_out_shuffle,
    fwht,
    hadamard_matrix,
)
from .trellis import TieRule, improved_viterbi_decode, traceback, viterbi_decode

__version__ = "0.1.0"

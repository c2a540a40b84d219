"""Nilpotent matrices commuting with a nilpotent Jordan matrix.

Partitions may be given as strings ("4,3,2^2,1") or integer sequences and
are returned as lists. Matrices are lists of rows of signed integers.
"""

import json as _json

from . import _core
from ._core import (
    DEFAULT_PRIME,
    b_path,
    basili_indices,
    conjugate,
    d_hat,
    delta_sequence,
    expjor2_witness,
    full_pattern,
    instantiate,
    jordan_matrix,
    longest_path,
    max_nilpotency_index,
    nb_digraph,
    nilpotency_index,
    ord_merge,
    partitions_of,
    rank,
    rp_of_partition,
    rp_set,
    rpt,
    sampled_max_nil,
    shape_of,
    verify_gansner_saks,
    witness_pattern,
)


def shape_set(mu, mode="random", budget=1000, values=(-1, 0, 1), prime=DEFAULT_PRIME, seed=0, jobs=1):
    """Shape census of the commutant pattern of mu as a report dict."""
    return _json.loads(_core.shape_set(mu, mode, budget, list(values), prime, seed, jobs))


__all__ = [name for name in dir() if not name.startswith("_")]

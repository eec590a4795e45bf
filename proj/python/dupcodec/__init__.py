"""Codec for channels with short tandem duplications and one substitution.

Words are hex-digit strings over {0..q-1}; field symbols are ints.
"""

from ._dupcodec import (
    Codec,
    IrrGraph,
    apply_duplication,
    apply_substitution,
    bounded_descendants,
    exhaustive_outputs,
    is_irreducible,
    max_root_after_one_sub,
    replay_trace,
    root,
    root_diff,
    sample_channel,
)

__all__ = [
    "Codec",
    "IrrGraph",
    "apply_duplication",
    "apply_substitution",
    "bounded_descendants",
    "exhaustive_outputs",
    "is_irreducible",
    "max_root_after_one_sub",
    "replay_trace",
    "root",
    "root_diff",
    "sample_channel",
]

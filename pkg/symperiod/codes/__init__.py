"""
Symperiod Codes -- GF(2) embeddings, the Griesmer bound and the involution
searches built on them.
"""

from .gf2 import LinearEmbedding, gf2_rank, min_weight, read_matrix, write_matrix
from .griesmer import (
    alg_lemma_holds,
    alg_lemma_min_rank,
    alg_lemma_sweep,
    griesmer_min_length,
    griesmer_search,
    verify_griesmer_exhaustive,
)
from .involutions import (
    InvolutionCertificate,
    find_sigma,
    find_tau,
    random_embedding,
    run_trials,
    subgroup_codim,
)

__all__ = [
    "LinearEmbedding",
    "gf2_rank",
    "min_weight",
    "read_matrix",
    "write_matrix",
    "alg_lemma_holds",
    "alg_lemma_min_rank",
    "alg_lemma_sweep",
    "griesmer_min_length",
    "griesmer_search",
    "verify_griesmer_exhaustive",
    "InvolutionCertificate",
    "find_sigma",
    "find_tau",
    "random_embedding",
    "run_trials",
    "subgroup_codim",
]

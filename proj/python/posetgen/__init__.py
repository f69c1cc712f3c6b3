"""Almost-uniform random generation of labelled posets.

The heavy lifting lives in the compiled ``_core`` extension: a Metropolis
chain over DAGs whose final transitive closure is an almost-uniform poset,
plus exhaustive small-n enumeration and total-variation diagnostics.
"""

from ._core import (
    Poset,
    default_steps,
    derive_seed,
    empirical_tv,
    enumerate_counts,
    enumerate_posets,
    exact_tv_curve,
    generate,
    sample_counts,
    tv_distance,
    __version__,
)

__all__ = [
    "Poset",
    "default_steps",
    "derive_seed",
    "empirical_tv",
    "enumerate_counts",
    "enumerate_posets",
    "exact_tv_curve",
    "generate",
    "sample_counts",
    "tv_distance",
    "__version__",
]

"""Nilpotent orbits of theta-groups."""

import json

from ._thetanil import (
    RetryBudgetExceeded,
    coset_count,
    grading_dims,
    kac_diagrams,
    nilpotent_wdds,
    nregular,
    orbits_json,
    pisystem_types,
    root_system,
)

__all__ = [
    "RetryBudgetExceeded",
    "coset_count",
    "grading_dims",
    "kac_diagrams",
    "nilpotent_wdds",
    "nregular",
    "orbits",
    "orbits_json",
    "pisystem_types",
    "root_system",
]


def orbits(type, kac, method="auto", seed=1, threads=1):
    """Orbit classification of the grading given by Kac labels, as a dict."""
    return json.loads(orbits_json(type, list(kac), method, seed, threads))

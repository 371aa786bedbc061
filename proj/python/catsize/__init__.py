"""Measurement-based effective size of two-branch quantum superpositions."""

from ._core import (
    Branch,
    CatSizeResult,
    GaussianSpread,
    RdmMode,
    SuperpositionSpec,
    __version__,
    branch_overlap,
    cat_size,
    disconnectivity,
    distillation_probability,
    entropy_curve,
    fit_number_distribution,
    fock_disconnectivity,
    fock_rdm,
    ghz_like_nmin,
    ghz_like_probability,
    number_distribution,
    rdm_closed_form,
    rdm_finite_n,
    relative_cat_size,
    run_protocol,
    simulate_protocol,
    success_probability,
    von_neumann_entropy,
)

__all__ = [
    "Branch",
    "CatSizeResult",
    "GaussianSpread",
    "RdmMode",
    "SuperpositionSpec",
    "__version__",
    "branch_overlap",
    "cat_size",
    "disconnectivity",
    "distillation_probability",
    "entropy_curve",
    "fit_number_distribution",
    "fock_disconnectivity",
    "fock_rdm",
    "ghz_like_nmin",
    "ghz_like_probability",
    "number_distribution",
    "rdm_closed_form",
    "rdm_finite_n",
    "relative_cat_size",
    "run_protocol",
    "simulate_protocol",
    "success_probability",
    "von_neumann_entropy",
]

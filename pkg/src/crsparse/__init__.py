"""Spectral graph sparsification by CR approximate matrix multiplication."""
from .crmm import (
    CRResult,
    SampleMultiset,
    SamplingDistribution,
    cr_multiply,
    cr_probabilities,
    empirical_variance,
    r_min_frobenius,
    r_min_prop2,
    r_min_spectral,
)
from .errors import *  # noqa: F401,F403
from .generators import gen_barbell, gen_random, gen_random_connected
from .graph import (
    WeightedGraph,
    boundary,
    connected_components,
    incidence_vector,
    laplacian,
    laplacian_from_boundary,
)
from .graphio import read_graph, write_graph
from .linalg import (
    Spectrum,
    condition_number_laplacian,
    eig_sym,
    frobenius_norm,
    pseudo_inv_sqrt,
    spectral_norm,
)
from .metrics import (
    ErrorReport,
    additive_error,
    check_additive_certificate,
    check_multiplicative_certificate,
    error_report,
    isotropic_error,
    quadratic_form_ratio,
)
from .sparsify import (
    ResistanceTable,
    SketchingDiag,
    SparsifyOutput,
    cr_sparsify,
    effective_resistances,
    er_sparsify,
    intersection_approx,
    sample_sparsify,
    uniform_sparsify,
)
from .sweep import SweepRecord, run_sweep

__version__ = "0.1.0"

"""Unique-neighbourhood graphs, exact and spectral Cheeger constants,
expander transforms, and random bipartite experiments."""
from .constructions import (
    BipartiteGraph,
    BipartiteModelParams,
    Signing,
    break_unn,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    q_value,
    random_bipartite,
    random_signing,
    twin_cycle,
    two_lift,
)
from .errors import DegenerateDegreeError, PreconditionError, SizeLimitError, UndefinedQuantityError, UnnlabError
from .experiments import ExperimentConfig, ExperimentRow, run_unn_experiment, table1_report
from .graph import Graph, UnnReport, b_matrix, check_unn, degree_sequence, neighborhood
from .kernels import USING_NUMBA
from .spectral import (
    CheegerCertificate,
    ExpanderParams,
    SpectralReport,
    boundary_edges,
    cheeger_exact,
    conductance_exact,
    is_expander,
    normalized_laplacian,
    spectral_report,
)

__version__ = "0.1.0"

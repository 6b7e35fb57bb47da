"""Generalized conductance of graph pairs: exact oracles, spectral
relaxation through the Laplacian pencil, sweep cuts and executable checks
of the generalized Cheeger inequality."""

from .eigen import EigenConfig, PencilEigenResult, d_orthogonalize, inverse_power_minimize, rayleigh
from .errors import (
    CheegerError,
    DegenerateError,
    GenerationError,
    InputError,
    NumericalError,
    OracleLimitError,
)
from .fileio import read_graph, read_vector, write_graph, write_vector
from .graph import (
    CutSet,
    Graph,
    cut_capacity,
    demand_graph,
    generate,
    kn_identity_graph,
    laplacian_quadform,
    normalized_quadform,
    st_edge_graph,
    validate_connected,
    volume,
)
from .oracles import (
    OracleLimit,
    conductance_exact,
    generalized_conductance_exact,
    isoperimetric_exact,
    min_st_cut_exact,
    pencil_eigen_dense_oracle,
)
from .solver import SolveConfig, SolveStats, cg_solve, project_span1_orthogonal
from .sweep import SweepResult, conductance_sweep, generalized_sweep
from .verify import (
    CheckResult,
    VerificationReport,
    check_eigensolver,
    check_generalized_cheeger,
    check_mihail,
    check_reductions,
    check_sweep_guarantee,
    run_verification,
)

__version__ = "0.1.0"

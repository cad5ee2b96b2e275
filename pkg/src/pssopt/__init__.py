"""Sequential-sampling global optimizer with a benchmark suite and batch CLI."""

from pssopt._backend import backend_name
from pssopt.analysis import (
    OccupancyCount,
    StatsSummary,
    aggregate_stats,
    discretize_occupancy,
    exploration_probability,
    grid_local_minima,
    intensification_probability,
    p_at_least_one,
    p_in_prominent,
    success_rate,
)
from pssopt.batch import BatchReport, ExperimentConfig, RunResult, export, run_batch
from pssopt.domain import CONTINUOUS, INTEGER, SearchDomain, quantize
from pssopt.engine import (
    Candidate,
    EvaluationError,
    ProminentRegion,
    PssParams,
    RunRecord,
    compute_bandwidth,
    initialize_population,
    run,
    sample_feature,
    update_prominent_region,
)
from pssopt.sampling import (
    LatinHypercubeSampler,
    MonteCarloSampler,
    RandomStream,
    Sampler,
    replicate_seed,
    scale_to_interval,
    uniform_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "BatchReport",
    "CONTINUOUS",
    "Candidate",
    "EvaluationError",
    "ExperimentConfig",
    "INTEGER",
    "LatinHypercubeSampler",
    "MonteCarloSampler",
    "OccupancyCount",
    "ProminentRegion",
    "PssParams",
    "RandomStream",
    "RunRecord",
    "RunResult",
    "Sampler",
    "SearchDomain",
    "StatsSummary",
    "aggregate_stats",
    "backend_name",
    "compute_bandwidth",
    "discretize_occupancy",
    "exploration_probability",
    "export",
    "grid_local_minima",
    "initialize_population",
    "intensification_probability",
    "p_at_least_one",
    "p_in_prominent",
    "quantize",
    "replicate_seed",
    "run",
    "run_batch",
    "sample_feature",
    "scale_to_interval",
    "success_rate",
    "uniform_matrix",
    "update_prominent_region",
]

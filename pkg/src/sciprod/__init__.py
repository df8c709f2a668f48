"""Research productivity indicators from publication and cost data.

Computes per-professor output, impact and productivity scores from seven
CSV inputs, normalizes them within subject categories, and renders the
country comparison report files. See the README for the file formats and
the command-line interface.
"""

__version__ = "0.1.0"

from .config import CohortConfig, CreditConfig, RunConfig, load_run_config
from .ingestion import InputPaths, load_dataset, validate_dataset, write_bundle
from .models import DatasetBundle, DatasetError, ValidationReport
from .pipeline import PipelineResult, run_analysis, write_outputs
from .synth import SCProfile, SynthConfig, default_config, generate

__all__ = [
    "CohortConfig",
    "CreditConfig",
    "DatasetBundle",
    "DatasetError",
    "InputPaths",
    "PipelineResult",
    "RunConfig",
    "SCProfile",
    "SynthConfig",
    "ValidationReport",
    "default_config",
    "generate",
    "load_dataset",
    "load_run_config",
    "run_analysis",
    "validate_dataset",
    "write_bundle",
    "write_outputs",
    "__version__",
]

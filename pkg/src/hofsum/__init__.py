"""Toolkit for the Hofstadter consecutive-sum sequence (OEIS A005243):
dual-route generation, representability witnesses, defect-plateau and
difference-set analysis, Diophantine scans, CSV export, and a CLI.
"""

from .analysis import (
    BoundCheckConfig,
    BoundCheckReport,
    DiffSetReport,
    GrowthStats,
    PlateauRecord,
    bound_checks,
    diffset_report,
    diffset_sweep,
    e_values_for_plateau,
    growth_stats,
    plateaus,
    representable_prefix_equality,
)
from .csvio import (
    CsvFormatError,
    read_terms_csv,
    write_diffset_csv,
    write_plateau_csv,
    write_ratio_csv,
    write_solutions_csv,
    write_terms_csv,
)
from .numtheory import (
    Decomposition,
    DiophantineSolution,
    SearchBounds,
    beukers_exponent_bound,
    consecutive_decomposition,
    is_power_of_two,
    solve_quadratic_pow2,
    solve_square_plus_d,
)
from .sequence import (
    MAX_SUM,
    Seed,
    SequenceOverflowError,
    SequenceState,
    Window,
    Witness,
    brute_force_generate,
    generate,
    is_representable,
    iter_windows,
    omitted_integers,
)
from .verify import SuiteResult, run_suites

__version__ = "0.1.0"

__all__ = [
    "BoundCheckConfig",
    "BoundCheckReport",
    "CsvFormatError",
    "Decomposition",
    "DiffSetReport",
    "DiophantineSolution",
    "GrowthStats",
    "MAX_SUM",
    "PlateauRecord",
    "SearchBounds",
    "Seed",
    "SequenceOverflowError",
    "SequenceState",
    "SuiteResult",
    "Window",
    "Witness",
    "beukers_exponent_bound",
    "bound_checks",
    "brute_force_generate",
    "consecutive_decomposition",
    "diffset_report",
    "diffset_sweep",
    "e_values_for_plateau",
    "generate",
    "growth_stats",
    "is_power_of_two",
    "is_representable",
    "iter_windows",
    "omitted_integers",
    "plateaus",
    "read_terms_csv",
    "representable_prefix_equality",
    "run_suites",
    "solve_quadratic_pow2",
    "solve_square_plus_d",
    "write_diffset_csv",
    "write_plateau_csv",
    "write_ratio_csv",
    "write_solutions_csv",
    "write_terms_csv",
]

"""Exact analysis and seeded simulation of a three-goods cut-and-choose game."""

from .diet import (
    FAIR_SHARE,
    DietProfile,
    FairnessReport,
    diet_profile,
    fairness_residual,
)
from .election import ElectionReport, to_election_report
from .errors import (
    CutChooseError,
    DuplicateLabel,
    GridTooLarge,
    InvalidPermutation,
    NegativeProbability,
    NotNormalized,
    OutOfRange,
)
from .simulate import (
    GENERATOR_NAME,
    ConvergenceReport,
    RoundRecord,
    SimulationResult,
    check_convergence,
    play_round,
    simulate,
)
from .solver import (
    FeasibilityResult,
    GridHit,
    GridSearchConfig,
    ResidualVector,
    SolutionFamily,
    UniquenessReport,
    grid_search,
    residual_system,
    solve_chooser_given_cutter,
    solve_joint,
    verify_uniqueness,
)
from .strategies import (
    FOODS,
    PREFERENCE_PAIRS,
    ChooserStrategy,
    CutterStrategy,
    FoodIndex,
    PreferenceClass,
    PreferenceKind,
    PreferenceRelation,
    TParams,
    Verdict,
    classify_preferences,
    from_t_params,
    make_chooser,
    make_cutter,
    permute_foods,
    symmetric_chooser,
    to_t_params,
)

__version__ = "0.1.0"

__all__ = [
    "CutChooseError",
    "NegativeProbability",
    "NotNormalized",
    "OutOfRange",
    "InvalidPermutation",
    "GridTooLarge",
    "DuplicateLabel",
    "FOODS",
    "FoodIndex",
    "PREFERENCE_PAIRS",
    "CutterStrategy",
    "ChooserStrategy",
    "TParams",
    "Verdict",
    "PreferenceRelation",
    "PreferenceKind",
    "PreferenceClass",
    "make_cutter",
    "make_chooser",
    "to_t_params",
    "from_t_params",
    "symmetric_chooser",
    "classify_preferences",
    "permute_foods",
    "FAIR_SHARE",
    "DietProfile",
    "FairnessReport",
    "diet_profile",
    "fairness_residual",
    "ResidualVector",
    "SolutionFamily",
    "FeasibilityResult",
    "GridSearchConfig",
    "GridHit",
    "UniquenessReport",
    "residual_system",
    "solve_joint",
    "solve_chooser_given_cutter",
    "grid_search",
    "verify_uniqueness",
    "GENERATOR_NAME",
    "RoundRecord",
    "SimulationResult",
    "ConvergenceReport",
    "play_round",
    "simulate",
    "check_convergence",
    "ElectionReport",
    "to_election_report",
    "__version__",
]

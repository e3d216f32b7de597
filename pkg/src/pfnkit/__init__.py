"""Picture fuzzy number algebra, aggregation operators, and MCDM tools."""

from .aggregators import (
    OPERATORS,
    check_weights,
    closed_form,
    pfiowa,
    pfiowg,
    pfiwa,
    pfiwg,
)
from .core import (
    BOTTOM,
    EPS_SUM,
    TOP,
    LegacyTriple,
    Pfn,
    ScoreProfile,
    admissible_key,
    cmp_admissible,
    cmp_score_accuracy,
    join_w,
    leq_componentwise,
    make_pfn,
    meet_w,
    score_profile,
)
from .interactional import (
    complement,
    n_ary_add,
    n_ary_mul,
    pfn_add,
    pfn_mul,
    pfn_pow,
    scalar_mul,
)
from .legacy import ClosureReport, closure_check, registered_operators
from .mcdm import (
    Alternative,
    Criterion,
    DecisionProblem,
    RankingResult,
    SweepTable,
    aggregate,
    normalize,
    rank,
    rank_problem,
    sweep_gamma,
)
from .tnorms import (
    FAMILY_NAMES,
    TnormFamily,
    aczel_alsina,
    dombi,
    frank,
    hamacher,
    piecewise,
    product,
    schweizer_sklar,
)

__version__ = "0.1.0"

__all__ = [
    "Alternative",
    "BOTTOM",
    "ClosureReport",
    "Criterion",
    "DecisionProblem",
    "EPS_SUM",
    "FAMILY_NAMES",
    "LegacyTriple",
    "OPERATORS",
    "Pfn",
    "RankingResult",
    "ScoreProfile",
    "SweepTable",
    "TOP",
    "TnormFamily",
    "aczel_alsina",
    "admissible_key",
    "aggregate",
    "check_weights",
    "closed_form",
    "closure_check",
    "cmp_admissible",
    "cmp_score_accuracy",
    "complement",
    "dombi",
    "frank",
    "hamacher",
    "join_w",
    "leq_componentwise",
    "make_pfn",
    "meet_w",
    "n_ary_add",
    "n_ary_mul",
    "normalize",
    "pfiowa",
    "pfiowg",
    "pfiwa",
    "pfiwg",
    "pfn_add",
    "pfn_mul",
    "pfn_pow",
    "piecewise",
    "product",
    "rank",
    "rank_problem",
    "registered_operators",
    "scalar_mul",
    "schweizer_sklar",
    "score_profile",
    "sweep_gamma",
]

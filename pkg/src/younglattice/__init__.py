"""Exact combinatorics of (anisotropic) Young diagrams as interlacing sequences."""

from .diagrams import (
    BoxStat,
    InterlacingPair,
    Partition,
    Profile,
    box_stats,
    corners,
    from_interlacing,
    profile,
)
from .growth import (
    GrowthPath,
    GrowthSampler,
    LevelDist,
    PlancherelAlpha,
    ZMeasure,
    centrality_check,
    level_distribution,
    path_probability,
    sample_path,
    step_dist,
)
from .interlace import (
    DiscreteDist,
    RationalPoly,
    check_interlacing_by_positivity,
    cotransition_dist,
    expand_cotransition,
    expand_transition,
    moments,
    transition_dist,
)
from .jack import JackContext, ZMeasureError, ZParams, covers

__version__ = "0.1.0"

__all__ = [
    "box_stats",
    "BoxStat",
    "centrality_check",
    "check_interlacing_by_positivity",
    "corners",
    "cotransition_dist",
    "covers",
    "DiscreteDist",
    "expand_cotransition",
    "expand_transition",
    "from_interlacing",
    "GrowthPath",
    "GrowthSampler",
    "InterlacingPair",
    "JackContext",
    "level_distribution",
    "LevelDist",
    "moments",
    "Partition",
    "path_probability",
    "PlancherelAlpha",
    "Profile",
    "profile",
    "RationalPoly",
    "sample_path",
    "step_dist",
    "transition_dist",
    "ZMeasure",
    "ZMeasureError",
    "ZParams",
]

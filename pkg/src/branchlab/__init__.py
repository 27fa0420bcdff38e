"""Exact branching laws for complex semisimple Lie algebras."""

from .asymptotics import (
    StretchSequence,
    VolumeEstimate,
    asymptotic_volume,
    fiber_report,
    growth_degree,
    logconcavity_report,
    stretch_sequence,
)
from .branching_cone import EffConeModel, SupportSample, branching_cone, eff_cone_report, enumerate_support
from .cones import RationalCone, cone_from_generators, cone_predicates, dual_halfspaces
from .characters import (
    Character,
    DominantDecomposition,
    branch,
    branching_multiplicity,
    freudenthal_character,
    klimyk_branch,
    weyl_dimension,
)
from .embedding import Embedding, load_embedding, space_dims
from .lie import RootSystem, Weight, build_root_system, to_dominant

__all__ = [
    "Character", "DominantDecomposition", "EffConeModel", "Embedding", "RationalCone", "RootSystem",
    "StretchSequence", "SupportSample", "VolumeEstimate", "Weight", "asymptotic_volume", "branch",
    "branching_cone", "branching_multiplicity", "build_root_system", "cone_from_generators",
    "cone_predicates", "dual_halfspaces", "eff_cone_report", "enumerate_support", "fiber_report",
    "freudenthal_character", "growth_degree", "klimyk_branch", "load_embedding", "logconcavity_report",
    "space_dims", "stretch_sequence", "to_dominant", "weyl_dimension",
]

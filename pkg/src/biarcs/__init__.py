"""Biarc interpolation and G1 arc-spline fitting in the plane."""

from .arc_spline import ArcSpline, EdgeRecord, Polyline, assign_tangents, fit_pairs, fit_spline, spline_length
from .biarc_core import (
    ArcSegment,
    Biarc,
    CaseLabel,
    G1Pair,
    JointFrame,
    Tolerances,
    arc_from_chord,
    biarc_angle,
    build_biarc,
    chord_at,
    classify,
    joint_frame,
    joint_tangent_at,
    param_of_chord,
)
from .errors import BiarcError, ConstructionError, DomainError, NotApplicable, ParseError
from .joint_strategies import (
    StrategyResult,
    StrategySpec,
    cubic_midpoint,
    curvature_constrained,
    equal_chord,
    j_shaped,
    parallel_tangent,
    select,
)
from .symplectic2d import Vec2, dot, reflect, rotate, skew, tilde

__version__ = "0.1.0"

__all__ = [
    "ArcSegment",
    "ArcSpline",
    "Biarc",
    "BiarcError",
    "CaseLabel",
    "ConstructionError",
    "DomainError",
    "EdgeRecord",
    "G1Pair",
    "JointFrame",
    "NotApplicable",
    "ParseError",
    "Polyline",
    "StrategyResult",
    "StrategySpec",
    "Tolerances",
    "Vec2",
    "arc_from_chord",
    "assign_tangents",
    "biarc_angle",
    "build_biarc",
    "chord_at",
    "classify",
    "cubic_midpoint",
    "curvature_constrained",
    "dot",
    "equal_chord",
    "fit_pairs",
    "fit_spline",
    "j_shaped",
    "joint_frame",
    "joint_tangent_at",
    "parallel_tangent",
    "param_of_chord",
    "reflect",
    "rotate",
    "select",
    "skew",
    "spline_length",
    "tilde",
]

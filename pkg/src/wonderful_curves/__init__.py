"""Exact combinatorics of minimal rational curves on wonderful compactifications."""
from .errors import (
    EmptyProduct,
    GroupTooLarge,
    InadmissibleRank,
    IndexOutOfRange,
    InvariantViolation,
    NoShortRoot,
    NotAmple,
    NotDominant,
    NotIndivisible,
    RankMismatch,
    UnknownTable,
    WonderfulError,
)
from .root_system import (
    Cocharacter,
    Coroot,
    Root,
    RootDatum,
    SimpleType,
    Weight,
    all_types,
    build,
    pairing,
    pairing_with_coroot,
    root_to_weight,
)
from .weyl import dominant_representative, enumerate_weyl_group, w0_on_cocharacter, w0_on_weight
from .curves import (
    AddCurve,
    CurveReport,
    MultCurve,
    OrbitLabel,
    additive_degree,
    coroot_cocharacter,
    curve_report,
    mult_degree,
    mult_limit_orbits,
)
from .wonderful import contraction_table, dim_projectivized_min_orbit, min_degree_bound, vmrt_report

__version__ = "0.1.0"

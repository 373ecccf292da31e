"""dtloc: refined Donaldson-Thomas series of framed toric quivers.

Exact-arithmetic toolkit that enumerates torus-fixed points of framed quiver
moduli as molten crystals, computes the signed contracting-weight index of
the tangent-obstruction complex per fixed point and slope, and assembles the
localization generating series, together with a slope-space wall analyzer
and a classical smooth Bialynicki-Birula verifier on products of projective
spaces.
"""

from .bbsmooth import (
    LinearProjectiveAction,
    bb_cells,
    verify_class_formula,
    verify_duality,
)
from .crystal import (
    Atom,
    AtomPoset,
    MoltenCrystal,
    build_atom_poset,
    crystal_weights,
    enumerate_crystals,
)
from .errors import (
    DTLocError,
    NonConfluentError,
    NonIsolatedFixedPointError,
    PosetDepthError,
    QuiverStructureError,
    QuiverSyntaxError,
    SlopeError,
    UnsupportedPotentialError,
    UsageError,
    WallSlopeError,
)
from .halflaurent import (
    HalfLaurent,
    TruncatedSeries,
    hl_add,
    hl_invert_y,
    hl_mul,
    hl_specialize_y1,
    series_mul,
)
from .localize import (
    ATTRACTING_NOTE,
    LocalizationSeries,
    WallReport,
    compare_chambers,
    euler_specialization,
    localization_series,
    product_law_check,
    wall_report,
)
from .quiver import (
    Arrow,
    CycleFunctional,
    PotentialTerm,
    QuiverWithPotential,
    Slope,
    builtin_quiver,
    disjoint_union,
    elementary_cycles,
    parse_quiver,
    serialize_quiver,
    slope_from_values,
    slope_lattice_basis,
    validate_slope,
)
from .tangent import (
    IndexReport,
    is_generic,
    jump_classes,
    tangent_complex_weights,
)

__version__ = "0.1.0"

__all__ = [
    "ATTRACTING_NOTE",
    "Arrow",
    "Atom",
    "AtomPoset",
    "CycleFunctional",
    "DTLocError",
    "HalfLaurent",
    "IndexReport",
    "LinearProjectiveAction",
    "LocalizationSeries",
    "MoltenCrystal",
    "NonConfluentError",
    "NonIsolatedFixedPointError",
    "PosetDepthError",
    "PotentialTerm",
    "QuiverStructureError",
    "QuiverSyntaxError",
    "QuiverWithPotential",
    "Slope",
    "SlopeError",
    "TruncatedSeries",
    "UnsupportedPotentialError",
    "UsageError",
    "WallReport",
    "WallSlopeError",
    "bb_cells",
    "build_atom_poset",
    "builtin_quiver",
    "compare_chambers",
    "crystal_weights",
    "disjoint_union",
    "elementary_cycles",
    "enumerate_crystals",
    "euler_specialization",
    "hl_add",
    "hl_invert_y",
    "hl_mul",
    "hl_specialize_y1",
    "is_generic",
    "jump_classes",
    "localization_series",
    "parse_quiver",
    "product_law_check",
    "serialize_quiver",
    "series_mul",
    "slope_from_values",
    "slope_lattice_basis",
    "tangent_complex_weights",
    "validate_slope",
    "verify_class_formula",
    "verify_duality",
    "wall_report",
]

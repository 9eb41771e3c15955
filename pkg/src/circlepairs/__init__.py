"""Two-circle arrangements on the 2-sphere: enumeration, invariants, rendering."""

__version__ = "0.1.0"

from .arrangement import (
    Arrangement,
    Disconnected,
    GaussPairCode,
    InvalidArrangement,
    MalformedCode,
    NotSpherical,
    NotTransversal,
    ValidationReport,
    decode,
    encode,
    format_gp1,
    iter_gp1_lines,
    parse_gp1,
    validate,
)
from .canonical import (
    CONFIGURATION_MODE,
    FLOW_MODE,
    CanonicalKey,
    EquivalenceMode,
    SymmetryReport,
    are_equivalent,
    canonical_key,
    symmetry,
)
from .generate import (
    CrossingSite,
    InvalidSite,
    Level,
    LevelClass,
    crossing,
    crossing_sites,
    enumerate_level,
    enumerate_up_to,
    seed_level,
)
from .regions import (
    DefiningVectors,
    RegionGraph,
    defining_vectors,
    matrix_swap_symmetric,
    region_graph,
    two_coloring,
)
from .oracle import OracleResult, brute_force, count_table
from .catalog import CatalogEntry, catalog_filename, format_catalog, parse_catalog, write_catalog
from .render import LayoutDegenerate, PlanarLayout, RenderStyle, layout, to_svg

__all__ = [
    "Arrangement",
    "CanonicalKey",
    "CatalogEntry",
    "CONFIGURATION_MODE",
    "CrossingSite",
    "DefiningVectors",
    "Disconnected",
    "EquivalenceMode",
    "FLOW_MODE",
    "GaussPairCode",
    "InvalidArrangement",
    "InvalidSite",
    "LayoutDegenerate",
    "Level",
    "LevelClass",
    "MalformedCode",
    "NotSpherical",
    "NotTransversal",
    "OracleResult",
    "PlanarLayout",
    "RegionGraph",
    "RenderStyle",
    "SymmetryReport",
    "ValidationReport",
    "are_equivalent",
    "brute_force",
    "canonical_key",
    "catalog_filename",
    "count_table",
    "crossing",
    "crossing_sites",
    "decode",
    "defining_vectors",
    "encode",
    "enumerate_level",
    "enumerate_up_to",
    "format_catalog",
    "format_gp1",
    "iter_gp1_lines",
    "layout",
    "matrix_swap_symmetric",
    "parse_catalog",
    "parse_gp1",
    "region_graph",
    "seed_level",
    "symmetry",
    "to_svg",
    "two_coloring",
    "validate",
    "write_catalog",
]

"""Strings, indecomposables and the King wall-and-chamber fan of the algebras B(n).

B(n) is the special biserial algebra kQ(n)/I(n) on the double quiver of type
A_{n+1}; its module category models perverse sheaves on complex projective
n-space.  Everything here is computed exactly (integers and ``Fraction``).
"""

from biserial_walls.quiver import (
    Letter,
    QuiverPresentation,
    Walk,
    build_quiver,
    enumerate_strings,
    find_bands,
    is_band,
    is_string,
    parse_walk,
    star,
)
from biserial_walls.strings import StringClass, phi, profile, psi, star_classes
from biserial_walls.representations import (
    Indecomposable,
    Representation,
    biserial_module,
    check_relations,
    dim_vector,
    enumerate_indecomposables,
    is_thin,
    string_module,
)
from biserial_walls.subobjects import (
    quotient_dimvectors,
    subobject_dimvectors,
    thin_subobject_supports,
)
from biserial_walls.cones import (
    ConeH,
    ConeV,
    canonical_form,
    cone_dim,
    cone_equal,
    cone_subset,
    contains_point,
    double_description,
    minimal_h,
)
from biserial_walls.stability import (
    closed_form_cone,
    nonthin_cone,
    stability_cone,
    walls,
)
from biserial_walls.chambers import (
    Chamber,
    Region,
    FanChambers,
    arrangement_regions,
    chamber_structure,
    chambers,
    interval_hyperplanes,
)
from biserial_walls.checks import verify

__version__ = "0.1.0"

__all__ = [
    "Chamber",
    "FanChambers",
    "ConeH",
    "ConeV",
    "Indecomposable",
    "Letter",
    "QuiverPresentation",
    "Region",
    "Representation",
    "StringClass",
    "Walk",
    "arrangement_regions",
    "biserial_module",
    "build_quiver",
    "canonical_form",
    "chamber_structure",
    "chambers",
    "check_relations",
    "closed_form_cone",
    "cone_dim",
    "cone_equal",
    "cone_subset",
    "contains_point",
    "dim_vector",
    "double_description",
    "enumerate_indecomposables",
    "enumerate_strings",
    "find_bands",
    "interval_hyperplanes",
    "is_band",
    "is_string",
    "is_thin",
    "minimal_h",
    "nonthin_cone",
    "parse_walk",
    "phi",
    "profile",
    "psi",
    "quotient_dimvectors",
    "stability_cone",
    "star",
    "star_classes",
    "string_module",
    "subobject_dimvectors",
    "thin_subobject_supports",
    "verify",
    "walls",
]

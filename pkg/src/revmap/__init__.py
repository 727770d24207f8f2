"""Reversing maps built from triples of involutions in finite permutation groups."""

from .exceptions import EnumerationOverflow, RevmapError, StructuralError, ValidationError
from .families import (FamilySpec, LabeledGroup, dihedral, dihedral_product, metacyclic,
                       parse_group_spec, rank3_cyclic_ext, s4_cover)
from .groups import (Coset, FiniteGroup, GroupHom, Permutation, StructureReport, Subgroup,
                     automorphism_group, closure_from_generators, involutions, is_isomorphic,
                     left_cosets, quotient_group, structure_report, subgroup_generated,
                     sylow_subgroup)
from .maps import MapKind, ReversingTriple, build_map, make_reversing_triple
from .triples import classify_map, enumerate_reversing_triples, equivalence_classes

__all__ = [
    "EnumerationOverflow", "RevmapError", "StructuralError", "ValidationError",
    "FamilySpec", "LabeledGroup", "dihedral", "dihedral_product", "metacyclic", "parse_group_spec",
    "rank3_cyclic_ext", "s4_cover",
    "Coset", "FiniteGroup", "GroupHom", "Permutation", "StructureReport", "Subgroup", "automorphism_group",
    "closure_from_generators", "involutions", "is_isomorphic", "left_cosets", "quotient_group",
    "structure_report", "subgroup_generated", "sylow_subgroup",
    "MapKind", "ReversingTriple", "build_map", "make_reversing_triple",
    "classify_map", "enumerate_reversing_triples", "equivalence_classes",
]

__version__ = "0.1.0"

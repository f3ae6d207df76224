"""Layered Seifert surfaces and slice obstructions for almost classical
knots presented by signed Gauss codes."""

from .errors import AcforgeError
from .gauss import (
    GaussDiagram,
    crossing_index,
    crossing_indices,
    is_almost_classical,
    is_checkerboard,
    make_alternating,
    parse_gauss_code,
    read_tabulation,
    seifert_cycles,
    state_components,
)
from .carter import CarterComplex, build_complex, carter_genus, image_membership
from .spanning import SpanningSolution, minimal_partition, spanning_solution
from .laurent import LaurentPoly
from .surface import (
    LayeredSurface,
    build_surface,
    canonical_slice_genus_of_diagram,
    homology_basis,
    surface_genus,
    surface_to_json,
)
from .linking import (
    BandPresentation,
    SeifertPair,
    band_presentation_from_json,
    band_presentation_to_json,
    band_seifert_pair,
    layered_lk,
    seifert_matrices,
    surface_seifert_pair,
    validate_pair,
    vlk,
)
from .invariants import (
    DEFAULT_SIGNATURE_SAMPLES,
    GenusReport,
    SignatureProfile,
    SignatureSample,
    alexander,
    directed_alexander,
    directed_signature,
    fox_milnor,
    genus_report,
    omega_of,
    sample_points,
    signature_profile,
)

__version__ = "0.1.0"

__all__ = [
    "AcforgeError",
    "GaussDiagram",
    "parse_gauss_code",
    "read_tabulation",
    "crossing_index",
    "crossing_indices",
    "is_almost_classical",
    "is_checkerboard",
    "make_alternating",
    "seifert_cycles",
    "state_components",
    "CarterComplex",
    "build_complex",
    "carter_genus",
    "image_membership",
    "SpanningSolution",
    "minimal_partition",
    "spanning_solution",
    "LaurentPoly",
    "LayeredSurface",
    "build_surface",
    "canonical_slice_genus_of_diagram",
    "homology_basis",
    "surface_genus",
    "surface_to_json",
    "BandPresentation",
    "SeifertPair",
    "band_presentation_from_json",
    "band_presentation_to_json",
    "band_seifert_pair",
    "layered_lk",
    "seifert_matrices",
    "surface_seifert_pair",
    "validate_pair",
    "vlk",
    "DEFAULT_SIGNATURE_SAMPLES",
    "GenusReport",
    "SignatureProfile",
    "SignatureSample",
    "alexander",
    "directed_alexander",
    "directed_signature",
    "fox_milnor",
    "genus_report",
    "omega_of",
    "sample_points",
    "signature_profile",
    "__version__",
]

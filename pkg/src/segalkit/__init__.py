"""Segal-space invariants of finite categories at finite truncation."""

from .bisimp import (
    BiSimpSet,
    FinSimpCat,
    SegalStatus,
    classification_diagram,
    classifying_complex,
    classifying_diagram,
    const_embed,
    diagonal,
    nerve_simpcat,
    segal_check,
    transpose_embed,
)
from .characterize import NonGroupAutH, char_level0, char_level1, char_level2, verify_characterization
from .fincat import (
    CategoryError,
    FinCat,
    FinGroup,
    WeqSpec,
    arrow_category,
    iso_classes,
    max_subgroupoid,
    validate_category,
    we_subcategory,
    weq_all,
    weq_iso,
    weq_spec,
)
from .hammock import Zigzag, enumerate_zigzags, length3_enumerate, pi0_mapping
from .segalsem import NotStrictSegal, completeness_check, dk_compare, hoequiv_space, homotopy_category, mapping_space
from .simpset import SimpSet, SimplicialError, Verdict, homology, invariant_equiv, nerve, pi0

__all__ = [
    "BiSimpSet",
    "CategoryError",
    "FinCat",
    "FinGroup",
    "FinSimpCat",
    "NonGroupAutH",
    "NotStrictSegal",
    "SegalStatus",
    "SimpSet",
    "SimplicialError",
    "Verdict",
    "WeqSpec",
    "Zigzag",
    "arrow_category",
    "char_level0",
    "char_level1",
    "char_level2",
    "classification_diagram",
    "classifying_complex",
    "classifying_diagram",
    "completeness_check",
    "const_embed",
    "diagonal",
    "dk_compare",
    "enumerate_zigzags",
    "hoequiv_space",
    "homology",
    "homotopy_category",
    "invariant_equiv",
    "iso_classes",
    "length3_enumerate",
    "mapping_space",
    "max_subgroupoid",
    "nerve",
    "nerve_simpcat",
    "pi0",
    "pi0_mapping",
    "segal_check",
    "transpose_embed",
    "validate_category",
    "verify_characterization",
    "we_subcategory",
    "weq_all",
    "weq_iso",
    "weq_spec",
]

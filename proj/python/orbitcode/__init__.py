"""Cyclic and quasi-cyclic orbit subspace codes over F_{q^n}.

Exact arithmetic in prime extension fields, canonical subspace algebra,
orbit-code analysis (stabilizers, weight spectra, equidistance, sunflowers),
difference-set verification, and exhaustive desk-scale scans.
"""

from orbitcode._core import (
    BridgeTheorem,
    BridgeVerdict,
    DsVerdict,
    ExampleReport,
    Field,
    FieldElement,
    OrbitcodeError,
    OrbitReport,
    PropertyReport,
    RdsVerdict,
    ScanReport,
    StabilizerInfo,
    Subspace,
    TrivialClass,
    analyze_orbit,
    bridge_check,
    build_sunflower,
    classify_trivial,
    difference_counts,
    property_prop10,
    property_theorem9,
    qbinomial,
    remark1_bounds,
    reproduce_example,
    scan_equidistant,
    scan_lemma4,
    scan_sunflowers,
    stabilizer,
    subspace_indices,
    sunflower_bounds,
    sunflower_check,
    translate,
    translate_intersection,
    verify_ds,
    verify_rds,
)

__all__ = [
    "BridgeTheorem",
    "BridgeVerdict",
    "DsVerdict",
    "ExampleReport",
    "Field",
    "FieldElement",
    "OrbitcodeError",
    "OrbitReport",
    "PropertyReport",
    "RdsVerdict",
    "ScanReport",
    "StabilizerInfo",
    "Subspace",
    "TrivialClass",
    "analyze_orbit",
    "bridge_check",
    "build_sunflower",
    "classify_trivial",
    "difference_counts",
    "property_prop10",
    "property_theorem9",
    "qbinomial",
    "remark1_bounds",
    "reproduce_example",
    "scan_equidistant",
    "scan_lemma4",
    "scan_sunflowers",
    "stabilizer",
    "subspace_indices",
    "sunflower_bounds",
    "sunflower_check",
    "translate",
    "translate_intersection",
    "verify_ds",
    "verify_rds",
]

__version__ = "0.1.0"

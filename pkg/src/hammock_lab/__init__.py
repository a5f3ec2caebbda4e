"""Finite-level derived hom-space toolkit.

Computes and cross-checks four models of the derived hom-space of a small
model category — total hom-complexes of (co)simplicial resolutions, double
homotopy colimits of hom-set diagrams, nerves of special-hammock
categories, and reduced-hammock hom-spaces — together with the simplicial
localization of a relative category by zigzag-word rewriting, all on
finite, exhaustively verifiable inputs.
"""

__version__ = "0.1.0"

__all__ = [
    "cli",
    "corpus",
    "fincat",
    "hammock",
    "hocolim",
    "homres",
    "io",
    "locres",
    "modelcat",
    "sset",
]

"""Exact cones of cycles on projective bundles over curves."""

__version__ = "0.1.0"

from .chow_ring import ChowElement, RingSpec, class_of_PQ1, render  # noqa: E402
from .cones import (  # noqa: E402
    Cone2D,
    NuTable,
    duality_defect,
    eff_cone,
    is_k_homogeneous,
    is_semistable,
    member,
    nef_cone,
    nu_table,
    tau_class,
)
from .hn_model import (  # noqa: E402
    HNData,
    InvalidDescriptor,
    SemistablePiece,
    cumulative,
    hn_from_summands,
    parse_descriptor,
    twist,
)
from .oracle import nu_oracle  # noqa: E402
from .polygon import build_polygon, eval_polygon, is_convex  # noqa: E402

__all__ = [
    "ChowElement",
    "Cone2D",
    "HNData",
    "InvalidDescriptor",
    "NuTable",
    "RingSpec",
    "SemistablePiece",
    "build_polygon",
    "class_of_PQ1",
    "cumulative",
    "duality_defect",
    "eff_cone",
    "eval_polygon",
    "hn_from_summands",
    "is_convex",
    "is_k_homogeneous",
    "is_semistable",
    "member",
    "nef_cone",
    "nu_oracle",
    "nu_table",
    "parse_descriptor",
    "render",
    "tau_class",
    "twist",
]

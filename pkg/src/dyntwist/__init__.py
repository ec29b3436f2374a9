"""Exact computation with Hopf algebras, comodule algebras and dynamical twists."""

from .scalar import Cyclo, Rational, format_scalar, parse_scalar
from .hopf import AlgebraData, HopfAlgebraData, group_algebra, verify_hopf
from .comod import (
    ComoduleAlgebraData,
    SimplicityCertificate,
    canonical_map,
    coinvariants,
    costable_closure,
    is_h_simple,
    verify_comodule_algebra,
)
from .rep import ModuleRep, SubHopfEmbedding, hom_space, theta_maps
from .stab import stab_hom_realized, yan_zhu_stabilizer
from .twist import (
    GaugeElement,
    TwistElement,
    build_twisted_galois,
    gauge_check,
    twisted_pentagon_check,
    verify_twist,
)
from .datum import (
    DatumSpec,
    MonomialDatum,
    gauge_from_equivalence,
    generic_galois_datum,
    phi_psi,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraData",
    "ComoduleAlgebraData",
    "Cyclo",
    "DatumSpec",
    "GaugeElement",
    "HopfAlgebraData",
    "ModuleRep",
    "MonomialDatum",
    "Rational",
    "SimplicityCertificate",
    "SubHopfEmbedding",
    "TwistElement",
    "build_twisted_galois",
    "canonical_map",
    "coinvariants",
    "costable_closure",
    "format_scalar",
    "gauge_check",
    "gauge_from_equivalence",
    "generic_galois_datum",
    "group_algebra",
    "hom_space",
    "is_h_simple",
    "parse_scalar",
    "phi_psi",
    "stab_hom_realized",
    "theta_maps",
    "twisted_pentagon_check",
    "verify_comodule_algebra",
    "verify_hopf",
    "verify_twist",
    "yan_zhu_stabilizer",
]

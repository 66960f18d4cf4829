"""Exact computer algebra for metaplectic Weyl-group actions, metaplectic
Demazure-Lusztig operators, Whittaker-type sums, and the GL_r family of
metaplectic polynomials generalizing nonsymmetric Macdonald polynomials."""

from .daha import (BasicRep, GLMetaData, check_daha_relations, iota_map,
                   jmath_map, metaplectic_polynomial)
from .group_algebra import (CosetRational, LaurentElement, PmFraction,
                            decompose, laurent_exact_div, rational_eq,
                            weyl_act_laurent)
from .hecke import (WeightVector, c_normalizer, d_factor, nabla_bar, p_factor,
                    pi_T, refl_T)
from .roots import MetaRootSystem, build_root_system
from .scalars import GroundField, Scalar, SpecializedField
from .weyl_action import (c_function, dl_T, dl_word, sigma_simple, sigma_word,
                          symmetric_hl, symmetrizer_apply, tau_T, whittaker)

__version__ = "0.1.0"

__all__ = [
    "BasicRep", "GLMetaData", "check_daha_relations", "iota_map", "jmath_map",
    "metaplectic_polynomial", "CosetRational", "LaurentElement", "PmFraction",
    "decompose", "laurent_exact_div", "rational_eq", "weyl_act_laurent",
    "WeightVector", "c_normalizer", "d_factor", "nabla_bar", "p_factor",
    "pi_T", "refl_T", "MetaRootSystem", "build_root_system", "GroundField",
    "Scalar", "SpecializedField", "c_function", "dl_T", "dl_word",
    "sigma_simple", "sigma_word", "symmetric_hl", "symmetrizer_apply",
    "tau_T", "whittaker",
]

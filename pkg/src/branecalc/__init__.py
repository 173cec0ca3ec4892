"""Rational-homotopy calculator for sphere mapping spaces.

Builds Sullivan models for sphere, disk, and path mapping spaces of a
minimal algebra (∧V, d), computes the shriek maps needed to glue them, and
produces the brane product and brane coproduct on cohomology together with
their homology-level duals, all over exact rational arithmetic.
"""

from .gca_core import (
    Element,
    Generator,
    GradedAlgebra,
    Monomial,
    ONE,
    Provenance,
    tensor,
    translate,
)
from .dga_models import (
    Derivation,
    DgaModel,
    DgaMorphism,
    ModelError,
    base_change,
    base_model,
    compose,
    disk_model,
    is_minimal,
    make_model,
    morphism_eps_tilde,
    morphism_phi,
    path_model,
    quotient,
    relative_tensor,
    sphere_model,
    sub_model,
    tensor_model,
    transposition_morphisms,
)
from .cohomology import (
    CohomologyBasis,
    class_vector,
    cohomology_basis,
    induced_map,
    invert_on_cohomology,
    is_quasi_iso,
)
from .shriek import (
    GorensteinInfo,
    ModuleMap,
    cocycle_defects,
    delta_evaluation,
    gamma_evaluation,
    gorenstein_info,
    hom_differential,
    is_pure,
    is_semi_pure,
    one_generator_ext_sign,
    shriek_delta_semipure,
    shriek_gamma_pure,
    transposition_sign_loop,
)
from .brane_ops import (
    BraneOperation,
    HomologyOperation,
    Report,
    brane_coproduct_dual,
    brane_product_dual,
    check_associativity,
    check_commutativity,
    check_frobenius,
    coproduct_double_composite,
    dualize_to_homology,
)
from .cli import ModelFile, ParseError, main, parse_model, print_model

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

"""habw: exact homological invariants for graded modules over quotient rings.

Depth, projective and G-dimension, Gorenstein / Cohen-Macaulay /
irreducibility verdicts, plus a harness that mechanically checks the
structural identities (above all depth M + Gdim M = depth R) on corpora and
randomized instances.
"""

__version__ = "0.1.0"

from .errors import (
    InternalCheckError,
    MalformedInputError,
    ZeroModuleError,
    ZeroRingError,
)
from .fields import PrimeField, RationalField, QQ
from .orders import MonomialOrder
from .poly import Poly, PolyRing
from .ring import RingPresentation, groebner_basis, make_ring, normal_form
from .modules import (
    ModuleMap,
    ModulePresentation,
    biduality,
    cyclic_module,
    direct_sum,
    free_module,
    from_matrix,
    hilbert_function,
    hom_to_ring,
    kernel,
    cokernel,
    mod_element,
    multiplication_map,
    quotient_by_element,
    residue_field,
    ses_from_cover,
    syzygy_matrix,
    zero_module,
)
from .koszul import KoszulComplex, koszul_complex, koszul_homology
from .resolution import (
    FreeResolution,
    ext_into,
    ext_to_ring,
    euler_characteristic_check,
    free_resolution,
    syzygy,
)
from .invariants import (
    BOUNDED,
    EXACT_PD,
    EXACT_SYZYGY,
    FALSE,
    INFINITE,
    TRUE,
    UNDETERMINED,
    GdimResult,
    Verdict,
    default_bound,
    depth,
    depth_of_ring,
    fp_injective_dim_at_most,
    gclass_membership,
    gdim,
    is_cohen_macaulay,
    is_gorenstein,
    projective_dimension,
    socle_dimension,
    socle_elements,
    socle_module,
    zero_ideal_irreducible,
)
from .harness import (
    TheoremCheck,
    random_module,
    random_ses_suite,
    verify_ab,
    verify_change_of_rings_mod,
    verify_change_of_rings_nzd,
    verify_depth_ses,
    verify_direct_limit_truncations,
    verify_fpinfty_ses,
    verify_gmodx_property,
    verify_gor_fpid,
    verify_gorenstein_quotient,
    verify_horseshoe,
    verify_irreducible,
    verify_rx_ses,
    verify_ses_exact,
)
from .dsl import ParseError, SourceFile, parse, parse_poly_str, pretty_print

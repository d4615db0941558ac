"""Exact computations with 2-solvable Frobenius Lie algebras B ⋉ K^n,
maximal abelian subalgebras of gl(n) and nonderogatory matrices."""
from .scalars import QuadExt, ScalarError, is_square_rational, quadext_arith, rational_arith
from .poly import PolyError, PolyQ, count_real_roots, poly_gcd, square_free_decomposition
from .linalg import (
    LinAlgError,
    Matrix,
    Subspace,
    centralizer,
    char_poly,
    conjugate,
    min_poly,
    normalizer_of_span,
    rank_kernel_solve,
    subalgebra_powers,
)
from .lie import (
    Fingerprint,
    JacobiError,
    LieAlgebra,
    LieError,
    derivation_algebra,
    derived_and_central_series,
    direct_sum,
    fingerprint,
    frobenius_decide,
    make_lie_algebra,
    nilradical_split,
    open_orbit_rank,
    pfaffian_of_dalpha,
    semidirect_sum,
    verify_isomorphism,
)
from .masa import (
    KravchukSignature,
    MasaError,
    is_masa,
    kravchuk_signature,
    nilpotency_class,
    recognize_class2_mans,
)
from .nonderog import (
    ClassificationLabel,
    EigenSignature,
    JordanResult,
    NonderogError,
    cartan_test,
    classify_G_phi,
    detP_formula_check,
    eigen_signature,
    is_nonderogatory,
    jordanize,
    vandermonde_isomorphism,
)
from .catalog import CatalogEntry, CatalogError, CatalogMismatch, build, dim8_table, witnesses

__version__ = "0.1.0"

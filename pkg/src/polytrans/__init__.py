"""Transform synthesis and verification for polynomial-algebra signal models.

Build the quotient-algebra signal model behind each classical finite
transform, generate every transform in the catalog (cosine/sine types 1-8 in
three variants, their skew generalizations, the complex/real/cas exponential
families, a rational block recursion, orthogonal-polynomial transforms,
Vandermonde and tensor constructions), and mechanically verify the identities
tying them together.
"""

from .poly import (
    BOUNDARY_TAGS,
    CHEB_KINDS,
    InvalidModulusError,
    Polynomial,
    boundary_polynomial,
    cheb_poly,
    cheb_zeros,
    verify_cheb_identity,
)
from .model import (
    BasisSpec,
    ModelGraph,
    NoPastError,
    SignalModel,
    chebyshev_basis,
    extension,
    extension_period,
    filter_matrix,
    model_from_matrix,
    monomial_basis,
    shift_matrix,
    subalgebra_of,
    visualize,
)
from .transforms import (
    DTT_NAMES,
    FAMILY_NAMES,
    PairingMismatchError,
    TransformMatrix,
    TransformSpec,
    derive_scaling,
    from_csv,
    generate,
    model_for,
    parse_spec,
    tensor,
    to_csv,
    to_json,
    vandermonde,
)
from .spectral import (
    check_diagonalization,
    convolve_direct,
    convolve_spectral,
    crt_base_change,
    frequency_response,
)
from .relations import (
    DUALITY,
    UnsupportedPairError,
    base_change,
    dual_of,
    duality_residual,
)
from .gmrf import (
    GmrfModel,
    covariance,
    klt,
    klt_vs_fourier,
    normality,
    stochastic_normalize,
)
from .checks import CHECKS, run_checks

__version__ = "0.1.0"

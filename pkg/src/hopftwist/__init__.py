"""Exact computations with Hopf algebras, twisted comodule algebras and H-identities."""

from .arith import RatExpr, SparsePoly, frac_eq, frac_reduce, parse, substitute
from .errors import (
    CocycleCheckFailed,
    DenominatorVanishes,
    HopfTwistError,
    InvalidGroupTable,
    InvalidHopfData,
    NotConvolutionInvertible,
    NotLazy,
    ParseError,
    ResourceLimit,
    ZeroParameter,
)
from .hopf import (
    CoalgebraData,
    HopfData,
    LinMap,
    TensorElt,
    convolution,
    convolution_inverse,
    free_hopf_coproduct,
    right_integral_space,
    tensor_coalgebra,
    theta,
    tinv,
    validate_hopf,
)
from .identities import (
    FreePoly,
    center_membership,
    coinv_generator,
    free_coaction,
    identity_search,
    is_central,
    is_coinvariant,
    is_identity,
    mu_alpha,
    mu_sigma,
)
from .kernels import BACKEND
from .twist import (
    Cocycle,
    SigmaTable,
    TwistedAlgebra,
    augment,
    center,
    check_cocycle,
    check_normalized,
    cocycle_inverse,
    lazy_transport,
    phi,
    specialize,
    trace_gram_det,
    twist,
    universal_sigma,
)

__version__ = "0.1.0"

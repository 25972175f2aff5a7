"""Rank-one double affine Hecke algebra operator calculus, Askey-Wilson
polynomials and functions, and the identity verification harness."""

from .awfunc import (
    FuncSample,
    appendix_weight,
    apply_L_numeric,
    apply_T1_numeric,
    apply_Y_numeric,
    aw_function,
    f_function,
    inverse_gaussian_expansion,
    kernel_coefficient,
    nonsym_aw_function,
    phi_S,
    phi_gamma,
)
from .awpoly import (
    aw_E_plus,
    aw_P_plus_monic,
    aw_antisym,
    aw_eigenvalue,
    aw_nonsym,
    aw_p,
)
from .daha import (
    DiffRefOp,
    aw_operator,
    basic_op,
    compose,
    conjugate_by_gaussian_ratio,
    op_equal,
)
from .automorphisms import (
    Automorphism,
    compose_automorphisms,
    get_automorphism,
    verify_automorphism,
)
from .errors import AwheckeError
from .laurent import LaurentPoly, eval_poly, invol, t1_decompose
from .params import (
    HeckeParams,
    ParamSet,
    apply_param_map,
    check_generic,
    dual_params,
    from_hecke,
    parameter_orbit,
    to_hecke,
)
from .qkernels import SeriesConfig, bhs, gaussian, qpoch, qpoch_inf, vwp_series, w87
from .suites import SUITE_NAMES, run_suite

__version__ = "0.1.0"

__all__ = [
    "Automorphism", "AwheckeError", "DiffRefOp", "FuncSample", "HeckeParams",
    "LaurentPoly", "ParamSet", "SeriesConfig", "SUITE_NAMES",
    "appendix_weight", "apply_L_numeric", "apply_T1_numeric", "apply_Y_numeric",
    "apply_param_map", "aw_E_plus", "aw_P_plus_monic", "aw_antisym",
    "aw_eigenvalue", "aw_function", "aw_nonsym", "aw_operator", "aw_p",
    "basic_op", "bhs", "check_generic", "compose", "compose_automorphisms",
    "conjugate_by_gaussian_ratio", "dual_params", "eval_poly", "f_function",
    "from_hecke", "gaussian", "get_automorphism", "inverse_gaussian_expansion",
    "invol", "kernel_coefficient", "nonsym_aw_function", "op_equal",
    "parameter_orbit", "phi_S", "phi_gamma", "qpoch", "qpoch_inf", "run_suite",
    "t1_decompose", "to_hecke", "verify_automorphism", "vwp_series", "w87",
]

"""Coherent states and matrix elements for the Jacobi group.

The group is the semidirect product of the Heisenberg-Weyl translations
with SU(1,1); its positive discrete series representations act on a
plane-times-disk family of squeezed coherent states.  The package
provides the group operations, the state coefficients and reproducing
kernel, closed-form matrix elements of displacement and squeeze
operators, and an independent truncated-operator oracle used to verify
all of it.
"""

__version__ = "0.1.0"

from .groups import (
    CoveringElement,
    JacobiElement,
    Su11Element,
    covering_compose,
    covering_identity,
    covering_inverse,
    jacobi_compose,
    jacobi_identity,
    jacobi_inverse,
    principal_lift,
    su11_act_disk,
    su11_act_translation,
    su11_compose,
    su11_identity,
    su11_inverse,
)
from .matrix_elements import (
    BranchWarning,
    MeTable,
    TailBoundError,
    displacement_me,
    expkminus_coeffs,
    jacobi_me,
    jacobi_tail_bound,
    me_table,
    squeeze_me,
    tg_me,
    tg_me_covering,
)
from .numerics import (
    BargmannIndex,
    PoleError,
    as_index,
    gauss_2f1_terminating,
    laguerre_assoc,
    log_gamma_ratio,
    pn_polynomial,
    pn_scaled_sequence,
    pn_sequence,
)
from .oracle import (
    TruncatedOperator,
    build_operators,
    interior_slice,
    light_cone_cut,
    matrix_exp,
    oracle_action_on_cs,
    oracle_displacement,
    oracle_squeeze,
    oracle_su11,
)
from .states import (
    ActionResult,
    CoeffVector,
    CsPoint,
    DivergenceWarning,
    TruncationWarning,
    act_on_cs,
    act_on_cs_covering,
    basis_function,
    cs_coefficients,
    kernel,
    mobius_action_series,
    psi_relation,
    scalar_product_cjk_quadrature,
    scalar_product_disk_quadrature,
    scalar_product_series,
    series_lower,
    series_raise,
    series_weight,
)

__all__ = [
    "__version__",
    "ActionResult",
    "BargmannIndex",
    "BranchWarning",
    "CoeffVector",
    "CoveringElement",
    "CsPoint",
    "DivergenceWarning",
    "JacobiElement",
    "MeTable",
    "PoleError",
    "Su11Element",
    "TailBoundError",
    "TruncatedOperator",
    "TruncationWarning",
    "act_on_cs",
    "act_on_cs_covering",
    "as_index",
    "basis_function",
    "build_operators",
    "covering_compose",
    "covering_identity",
    "covering_inverse",
    "cs_coefficients",
    "displacement_me",
    "expkminus_coeffs",
    "gauss_2f1_terminating",
    "interior_slice",
    "jacobi_compose",
    "jacobi_identity",
    "jacobi_inverse",
    "jacobi_me",
    "jacobi_tail_bound",
    "kernel",
    "laguerre_assoc",
    "light_cone_cut",
    "log_gamma_ratio",
    "matrix_exp",
    "me_table",
    "mobius_action_series",
    "oracle_action_on_cs",
    "oracle_displacement",
    "oracle_squeeze",
    "oracle_su11",
    "pn_polynomial",
    "pn_scaled_sequence",
    "pn_sequence",
    "principal_lift",
    "psi_relation",
    "scalar_product_cjk_quadrature",
    "scalar_product_disk_quadrature",
    "scalar_product_series",
    "series_lower",
    "series_raise",
    "series_weight",
    "squeeze_me",
    "su11_act_disk",
    "su11_act_translation",
    "su11_compose",
    "su11_identity",
    "su11_inverse",
    "tg_me",
    "tg_me_covering",
]

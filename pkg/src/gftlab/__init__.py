"""gftlab: generators and desk-scale verification for two classes of
normalized analytic functions on the unit disc."""

from .analysis import (
    DEFAULT_RADII,
    SHARP_WIDTH,
    VALUE_TOL,
    GridSpec,
    RadiusEstimate,
    ScanRow,
    VerificationReport,
    arg_bound,
    bound_G,
    bound_U,
    check_membership_L,
    check_membership_R,
    conjecture_scan,
    estimate_univalence_radius,
    eval_on_points,
    grid_points,
    max_re_on_grid,
    min_re_on_grid,
    partial_sum,
    radius_s2_closed_form,
    verify_coeff_bounds,
    verify_h_monotone,
    verify_strip_lemma,
    verify_theorem_arg_bound,
    verify_theorem_f_over_z,
    verify_theorem_radial_bounds,
    verify_theorem_re_fprime,
    verify_theorem_strip_fprime,
)
from .gft_ops import (
    LParams,
    RParams,
    SchurSpec,
    apply_L,
    cis,
    coeff_bound,
    extreme_function,
    halfplane_series,
    phi_b_series,
    random_member_L,
    random_member_R,
    seeded_members_L,
    seeded_members_R,
    seeded_schur_specs,
    solve_L,
)
from .powser import (
    COEFF_TOL,
    TaylorSeries,
    compose,
    derivative,
    dump_series,
    evaluate,
    linear_combination,
    load_series,
    reciprocal,
    scale_argument,
    series_from_json,
    series_to_json,
)
from .regions import (
    Disc,
    HalfPlane,
    Region,
    Strip,
    boundary_re_profile,
    contains,
    phi_b_at,
    phi_boundary_curve,
    re_phi_on_boundary,
)

__version__ = "0.1.0"

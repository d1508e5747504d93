"""Counting polynomials and F1-zeta functions of catalog schemes."""

from ._core import (
    DivergentParameters,
    Error,
    InvalidRank,
    NotAGroup,
    NotSmoothProjective,
    ParseError,
    PoleAt,
    SchemeDescriptor,
    SignedZeta,
    TooLarge,
    TooLargeInstance,
    check_fe_group,
    check_fe_projective,
    check_lemma_group,
    count_points,
    counting_polynomial,
    euler_characteristic,
    evaluate,
    find_reflection_centers,
    parse,
    poincare_by_degrees,
    power,
    reflect,
    run_cli,
    soule_limit_check,
    verify_counting,
    weyl_enumerate,
    zeta_from_counting,
    zeta_q_closed,
    zeta_q_series,
)

__all__ = [name for name in dir() if not name.startswith("_")]

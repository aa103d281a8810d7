"""Decreasing monomial codes: polar construction, duality, orbits.

Thin wrapper around the compiled core; everything lives in ``decmon._core``.
"""

from ._core import (  # noqa: F401
    CapError,
    Monomial,
    MonomialCode,
    MonomialSet,
    Partition,
    SymmetricChannel,
    __version__,
    construct_polar,
    decreasing_closure,
    dual,
    evaluate,
    gaussian_binomial,
    generator_matrix_text,
    interval,
    is_decreasing,
    is_weakly_decreasing,
    leq,
    make_bec,
    make_bsc,
    min_distance,
    min_weight_bruteforce,
    min_weight_count,
    min_weight_enumerate,
    monte_carlo_bhattacharyya,
    orbit_enumerate,
    orbit_size,
    parse_channel_spec,
    r_minus,
    r_plus,
    rank_monomials,
    sign_sequence,
    synthesize_bit_channel,
    transform_minus,
    transform_plus,
    weak_leq,
    weakly_self_dual,
    young_partition,
)

"""Exact-arithmetic symmetric functions: partitions, the m/e/h/p bases,
truncated series on the alphabet X/(1-tX) and identity verification."""

from waring._waring import (  # noqa: F401
    BiSeries,
    DslParseError,
    F_direct,
    F_expansion,
    MultiPoly,
    Partition,
    Rational,
    SymExpr,
    ZPoly,
    appendix_factorization_check,
    binom_int,
    binom_z,
    check_equal,
    complete_in_power,
    complete_poly,
    cor4_sides,
    cor5_sides,
    dsl_eval,
    dsl_print,
    elementary_in_power,
    elementary_poly,
    expand,
    factorial,
    ferrers_alphabet,
    identity_ids,
    lassalle_binom,
    lassalle_binom_genfun,
    monomial_poly,
    partitions_of,
    pochhammer,
    power_in_elementary,
    power_in_homogeneous,
    power_poly,
    rising_factorial,
    shifted_power_series,
    sym_atom,
    thm1_rhs,
    thm2_rhs,
    thm5_sides,
    thm6_sides,
    transformed_basis_series,
    verify,
    z_of,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"

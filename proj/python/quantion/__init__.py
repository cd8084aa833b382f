"""Quantion algebra: the 2x2 complex matrix number system, quantal-algebra
identity verification and the left representation."""

from ._core import (
    NotHermitianError,
    NullDivisorError,
    Quantion,
    act_right,
    alg_norm,
    basis_table,
    beta_geometric,
    beta_mul,
    compose_verify,
    from_four_vector,
    from_tetrad_components,
    inverse,
    is_null,
    kahler_decompose,
    left_rep,
    met_norm,
    minkowski_dot,
    null_tetrad,
    pauli_decompose,
    quaternion_embed,
    sharp,
    star,
    to_four_vector,
    verify,
    zovko_current,
)

__all__ = [name for name in dir() if not name.startswith("_")]

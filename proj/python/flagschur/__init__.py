"""Exact products in q-Schur, 0-Schur and 0-Hecke algebras."""

from ._core import (
    ResourceLimitError,
    closed_orbit,
    decompose,
    deg_leq,
    hasse_dot,
    hecke_mult,
    multiply,
    nested_idempotent,
    open_orbit,
    prime_limit,
    star,
    structure_constant,
    t_sigma,
    verify,
)

__all__ = [
    "ResourceLimitError",
    "closed_orbit",
    "decompose",
    "deg_leq",
    "hasse_dot",
    "hecke_mult",
    "multiply",
    "nested_idempotent",
    "open_orbit",
    "prime_limit",
    "star",
    "structure_constant",
    "t_sigma",
    "verify",
]

"""Exact Horadam-sequence arithmetic and identity checks.

Values are returned as strings in the library's scalar grammar
(``3/2``, ``-1+2/3i``) so they stay exact; convert with ``fractions.Fraction``
when the value is real.
"""

from ._horadam import (
    HoradamError,
    PreconditionUnmet,
    benchmark,
    check,
    identities,
    term,
    verify,
)

__all__ = [
    "HoradamError",
    "PreconditionUnmet",
    "benchmark",
    "check",
    "identities",
    "term",
    "verify",
]

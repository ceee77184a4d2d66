"""Enumeration bounds.

``SPRINGER_KIT_MAX_RANK`` overrides the rank bound used when enumerating
unipotent classes.  It is read at call time so tests and the CLI can set it
per process.
"""

import os

DEFAULT_MAX_RANK = 30
# verification sweeps are cheap per parameter, so they get a separate, wider bound
DEFAULT_SWEEP_MAX_N = 10_000
# W(B_n) has 2^n n! elements; 7 gives 645120
DEFAULT_WEYL_MAX_RANK = 7

ENV_MAX_RANK = "SPRINGER_KIT_MAX_RANK"


def max_rank():
    value = os.environ.get(ENV_MAX_RANK)
    if value is None or value == "":
        return DEFAULT_MAX_RANK
    try:
        bound = int(value)
    except ValueError:
        raise ValueError(f"{ENV_MAX_RANK} must be an integer, got {value!r}") from None
    if bound < 0:
        raise ValueError(f"{ENV_MAX_RANK} must be non-negative, got {bound}")
    return bound

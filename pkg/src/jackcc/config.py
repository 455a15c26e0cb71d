"""Degree bound shared by the caches and the enumeration routines."""

import os

from .errors import DegreeTooLarge

DEFAULT_BOUND = 8


def degree_bound():
    """Current bound; the JACKCC_MAX_N environment variable overrides the default."""
    raw = os.environ.get("JACKCC_MAX_N")
    if raw is None:
        return DEFAULT_BOUND
    return int(raw)


def check_degree(n):
    bound = degree_bound()
    if n > bound:
        raise DegreeTooLarge("degree %d exceeds the configured bound %d" % (n, bound))

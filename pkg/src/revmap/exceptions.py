"""Exception hierarchy shared by all modules."""

import os
from contextlib import contextmanager

DEFAULT_CLOSURE_CAP = 20000
DEFAULT_AUTOMORPHISM_CAP = 500


class RevmapError(Exception):
    pass


class ValidationError(RevmapError, ValueError):
    """Bad input: non-bijective images, element outside a group, broken relation."""


class EnumerationOverflow(RevmapError):
    """An enumeration would exceed its configured cap."""

    def __init__(self, what, cap):
        super().__init__(f"{what} exceeds the enumeration cap of {cap} (set REVMAP_CAP to raise it)")
        self.cap = cap


class StructuralError(RevmapError):
    """A coset configuration fails the map axioms."""


_override = None


@contextmanager
def cap_override(cap):
    """Make ``cap`` the default for both caps inside the block (used by ``--cap``)."""
    global _override
    saved, _override = _override, cap
    try:
        yield
    finally:
        _override = saved


def closure_cap(cap=None):
    if cap is not None:
        return int(cap)
    if _override is not None:
        return int(_override)
    env = os.environ.get("REVMAP_CAP")
    return int(env) if env else DEFAULT_CLOSURE_CAP


def automorphism_cap(cap=None):
    if cap is not None:
        return int(cap)
    if _override is not None:
        return int(_override)
    env = os.environ.get("REVMAP_CAP")
    return int(env) if env else DEFAULT_AUTOMORPHISM_CAP

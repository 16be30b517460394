"""Exceptions shared across the package."""


class CapacityError(Exception):
    """An input is too large for the requested computation method."""


class UnsupportedFamilyError(Exception):
    """No closed-form formula covers the requested modulus."""

"""Exception types raised by the public API.

Everything derives from SpinentError, which itself derives from ValueError,
so callers may catch either the specific class or plain ValueError.
"""


class SpinentError(ValueError):
    """Base class for all spinent errors."""


class NormalizationError(SpinentError):
    """Sum of squared coefficient magnitudes deviates from 1 beyond tolerance."""


class LengthMismatchError(SpinentError):
    """Coefficient vector length does not match the atom count."""


class InvalidQuantumNumberError(SpinentError):
    """Requested magnetic quantum number m is not one of j, j-1, ..., -j."""


class InsufficientAtomsError(SpinentError):
    """Operation needs at least two atoms."""


class DegenerateMeanSpinError(SpinentError):
    """Mean spin vector is too short to define a rotated frame."""


class DimensionCapError(SpinentError):
    """Atom count exceeds the 2**N brute-force dimension cap."""


class NotSymmetricError(SpinentError):
    """Full product-basis state is not exchange symmetric within tolerance."""


class WrongAtomCountError(SpinentError):
    """Operation is defined only for a specific atom count."""

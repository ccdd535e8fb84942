"""Exception hierarchy shared by every module.

Each domain error carries a stable ``name`` (the class name) which the CLI
reports in its machine-readable error payload.
"""

from __future__ import annotations


class ShafdecError(Exception):
    """Base class for domain errors."""

    def __init__(self, message: str = "", path: tuple[str, ...] = ()):
        super().__init__(message)
        self.message = message
        self.path = path

    @property
    def name(self) -> str:
        return type(self).__name__

    def at(self, *prefix: str) -> "ShafdecError":
        """Prefix the decomposition-tree path where the error occurred."""
        self.path = tuple(prefix) + self.path
        return self

    def to_json(self) -> dict:
        out = {"error": self.name, "message": self.message}
        if self.path:
            out["path"] = "/".join(self.path)
        return out

    def __str__(self) -> str:
        if self.path:
            return f"{self.message} (at {'/'.join(self.path)})"
        return self.message


# exactmath
class ZeroPolynomial(ShafdecError):
    pass


class DegreeTooLow(ShafdecError):
    pass


class ZeroInput(ShafdecError):
    pass


class InvalidPrimeSet(ShafdecError):
    pass


# hypermodel
class InvalidModel(ShafdecError):
    pass


class NonSquarefree(ShafdecError):
    pass


class MissingPrimeTwo(ShafdecError):
    pass


class NotSIntegral(ShafdecError):
    pass


class BadPrime(ShafdecError):
    pass


# decompose / fiberprod
class ZeroConstantTerm(ShafdecError):
    pass


class DegreeMismatch(ShafdecError):
    pass


class GenusTooLow(ShafdecError):
    pass


class NotSplit(ShafdecError):
    pass


class RepeatedRoots(ShafdecError):
    pass


class NotCoprime(ShafdecError):
    pass


# enumeration
class RepeatedPoint(ShafdecError):
    pass


class TooFewPoints(ShafdecError):
    pass

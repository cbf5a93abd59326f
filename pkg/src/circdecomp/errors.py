"""Exception hierarchy shared by every module of the package."""


class CircDecompError(Exception):
    """Base class; the CLI maps subclasses to exit codes."""

    exit_code = 1


class InvalidSpec(CircDecompError):
    pass


class HalfJump(CircDecompError):
    pass


class Disconnected(CircDecompError):
    pass


class DegenerateJump(CircDecompError):
    pass


class SameParityJumps(CircDecompError):
    pass


class AlphaTooSmall(CircDecompError):
    pass


class BadShape(CircDecompError):
    pass


class DegenerateC(CircDecompError):
    pass


class OddHostOrder(CircDecompError):
    pass


class ParityUndefined(CircDecompError):
    pass


class VertexAbsent(CircDecompError):
    pass


class Q1Missing(CircDecompError):
    exit_code = 2


class ConstructionFailed(CircDecompError):
    exit_code = 2


class UnbalancedJumps(CircDecompError):
    pass


class NoValidPairing(CircDecompError):
    pass


class HalfJumpPresent(CircDecompError):
    pass


class PairingMismatch(CircDecompError):
    pass


class PropertyQFailed(CircDecompError):
    pass


class OddN(CircDecompError):
    pass


class OddOrderUnsupported(CircDecompError):
    pass


class CertificateInvalid(CircDecompError):
    pass


class HNotDecomposition(CircDecompError):
    pass


class TooLarge(CircDecompError):
    pass

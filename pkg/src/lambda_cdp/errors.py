"""Exception types shared across the library."""


class LambdaCDPError(Exception):
    """Base class for all library-specific errors."""


class GraphParseError(LambdaCDPError):
    """Graph input text is malformed.

    Carries the 1-based line number of the offending line when known.
    """

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class DisconnectedGraphError(LambdaCDPError):
    """An analysis entry point was handed a disconnected graph."""


class ConvergenceError(LambdaCDPError):
    """The eigensolver failed to reach the requested accuracy."""

    def __init__(self, message, off_norm=None):
        super().__init__(message)
        self.off_norm = off_norm


class NoSuchEigenvalueError(LambdaCDPError):
    """A requested eigenvalue does not match any computed cluster."""


class NotEquitableError(LambdaCDPError):
    """A partition expected to be equitable is not.

    ``witness`` is ``(r, s, v, w)``: two vertices v, w of block r whose
    weighted degrees into block s disagree (block positions 1-based).
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class SpectralMismatchError(LambdaCDPError):
    """Internal spectral consistency check failed.

    Signals a tolerance misconfiguration (for example an eigenvalue of a
    divisor matrix that cannot be matched to the parent spectrum) rather
    than bad user input.
    """


class VertexCapExceededError(LambdaCDPError):
    """Graph exceeds the configured automorphism-search vertex cap."""


class CoalescencePreconditionError(LambdaCDPError):
    """A coalescence precondition failed; the message names which one."""

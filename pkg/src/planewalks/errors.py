"""Exception types shared across the package."""


class PlanewalksError(Exception):
    """Base class for all errors raised by this package."""


class EmbeddingInvalid(PlanewalksError):
    """Rotation system is inconsistent or fails the Euler check."""


class NotConnected(PlanewalksError):
    """Operation requires a connected graph."""


class AmbiguousEndpoint(PlanewalksError):
    """A walk endpoint occurs zero or more than one time."""


class NotACycle(PlanewalksError):
    """Expected a cycle of the host graph."""


class NotAPath(PlanewalksError):
    """Expected a path of the host graph."""


class EmptyS(PlanewalksError):
    """Relative-connectivity target set must be nonempty."""


class CycleNotFacial(PlanewalksError):
    """Cycle does not bound a face in the stored embedding."""


class PreconditionFailed(PlanewalksError):
    """A structural hypothesis of a construction does not hold.

    Carries a short machine-readable reason plus an optional witness
    (e.g. the cutset violating a relative-connectivity requirement).
    """

    def __init__(self, reason: str, witness=None):
        super().__init__(reason if witness is None else f"{reason}: {witness}")
        self.reason = reason
        self.witness = witness


class SearchExhausted(PlanewalksError):
    """Exact search failed on an instance where theory guarantees success.

    This always indicates a bug (or an unverified precondition); the
    message names the instance so it can be reported.
    """


class OverlapViolation(PlanewalksError):
    """Jigsaw parts overlap in an edge or in unexpected vertices."""


class SdrCollision(PlanewalksError):
    """Two combined SDRs use the same representative vertex."""


class CertificationFailed(PlanewalksError):
    """A produced object fails its own verifier."""


class NotSpanning(PlanewalksError):
    """Walk does not cover every vertex of the host graph."""


class BadRange(PlanewalksError):
    """Truncation indices out of range."""


class UnknownFamily(PlanewalksError):
    """No builtin family generator with that name."""


class InsufficientLevels(PlanewalksError):
    """The prefix-limit experiment needs more levels."""

class RectDelError(Exception):
    """Base class for rectangle-Delaunay errors."""


class GeneralPositionError(RectDelError):
    """Input point set violates the general-position requirements."""

    def __init__(self, report):
        self.report = report
        super().__init__(f"general position violated: {report.describe()}")


class DegenerateInputError(RectDelError):
    """Four points on one empty homothet boundary (or equivalent degeneracy)."""


class DisconnectedGraphError(RectDelError):
    """The built graph is disconnected; signals a construction bug."""


class CertificateError(RectDelError):
    """A certificate failed verification."""

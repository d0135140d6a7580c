"""Exception hierarchy shared by all modules."""


class GraphMotiveError(ValueError):
    """Base class for invalid input or failed contracts."""


class NotConnectedError(GraphMotiveError):
    def __init__(self, msg="not connected"):
        super().__init__(msg)


class EmbeddingError(GraphMotiveError):
    """Rotation system is malformed or not a sphere embedding."""


class DomainTooLargeError(GraphMotiveError):
    """Brute-force enumeration would exceed the configured work cap."""


class DefectError(RuntimeError):
    """An internal identity failed; always indicates a bug."""

"""Exception hierarchy.

Every error carries a ``category`` string; the CLI prints it and maps it to
an exit code, so the names are part of the machine-readable interface.
"""


class FourPageError(Exception):
    category = "FourPageError"
    exit_code = 1


class ParseError(FourPageError, ValueError):
    category = "ParseError"
    exit_code = 2


class MalformedRecord(ParseError):
    pass


class LabelCountError(ParseError):
    def __init__(self, message, labels=()):
        super().__init__(message)
        self.labels = tuple(labels)


class EmptyDiagram(ParseError):
    category = "EmptyDiagram"


class NonPlanarTrace(ParseError):
    category = "NonPlanarTrace"


class NotBipartite(FourPageError):
    category = "NotBipartite"


class SplitDiagram(FourPageError):
    category = "SplitDiagram"
    exit_code = 3


class NotReduced(FourPageError):
    category = "NotReduced"
    exit_code = 4

    def __init__(self, message, crossings=()):
        super().__init__(message)
        self.crossings = tuple(crossings)


class Disconnected(FourPageError):
    category = "Disconnected"


class NotSingleCircle(FourPageError):
    category = "NotSingleCircle"


class NotNonAlternating(FourPageError):
    category = "NotNonAlternating"


class ComponentCollapse(FourPageError):
    category = "ComponentCollapse"
    exit_code = 5


class InvalidPresentation(FourPageError):
    category = "InvalidPresentation"


class NonPositiveEpsilon(FourPageError, ValueError):
    category = "NonPositiveEpsilon"


class CapExceeded(FourPageError):
    category = "CapExceeded"
    exit_code = 6

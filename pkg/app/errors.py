# app/errors.py
"""Exception hierarchy shared by the library, the CLI and the HTTP routes.

Every error is a ValueError so callers that only care about "bad input"
can catch one thing; the routes map AllianceLabError to HTTP 400 and the
CLI maps it to exit code 2.
"""


class AllianceLabError(ValueError):
    pass


# graph-core
class GraphFormatError(AllianceLabError):
    pass


class MalformedHeader(GraphFormatError):
    pass


class VertexOutOfRange(GraphFormatError):
    pass


class SelfLoop(GraphFormatError):
    pass


class DuplicateEdge(GraphFormatError):
    pass


class UnknownFamily(AllianceLabError):
    pass


class BadParams(AllianceLabError):
    pass


# textual forms (condition sets, signed functions, thresholds, vertex lists)
class ParseError(AllianceLabError):
    pass


# alliance-framework
class NeutralsOverlapSet(AllianceLabError):
    pass


class UnknownParameter(AllianceLabError):
    pass


class SigmaRhoOutOfRange(AllianceLabError):
    pass


# direct-definitions
class ZeroValueOutsideMinusMode(AllianceLabError):
    pass


class BadThreshold(AllianceLabError):
    pass


# solvers
class GraphTooLargeForExhaustive(AllianceLabError):
    pass


class NonGlobalSpecUnsupported(AllianceLabError):
    pass


# equivalence-harness
class UnknownProposition(AllianceLabError):
    pass


class IsolatedVertexOutsideApplicability(UserWarning):
    """Logged, never raised: the check ran on a graph with an isolated vertex."""

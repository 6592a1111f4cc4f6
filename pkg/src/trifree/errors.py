"""Exception hierarchy shared by all trifree modules."""


class TrifreeError(Exception):
    """Base class for all errors raised by this package."""


class CapacityExceeded(TrifreeError):
    """Vertex count outside the supported range 1..64."""


class InvalidEdge(TrifreeError):
    """Edge endpoint out of range, or a self-loop."""


class EmptySet(TrifreeError):
    """An operation that needs a nonempty vertex set received an empty one."""


class Graph6Error(TrifreeError):
    """Base class for graph6 parse failures."""


class MalformedHeader(Graph6Error):
    """The size field of a graph6 record cannot be decoded."""


class BadLength(Graph6Error):
    """A graph6 record has the wrong number of adjacency bytes."""


class BadByte(Graph6Error):
    """A graph6 byte lies outside the printable range 63..126."""


class Sparse6Unsupported(Graph6Error):
    """Record starts with ':' (sparse6), which this package does not read."""


class ParityError(TrifreeError):
    """A bound formula was evaluated at a clique number of the wrong parity."""


class OutOfTable(TrifreeError):
    """Clique number outside the tabulated range 2..11."""


class RamseyUnknown(TrifreeError):
    """No stored knowledge for R(3,k) at this k."""


class ScaleExceeded(TrifreeError):
    """Requested size is beyond the configured desk-scale budget."""


class CanonScaleExceeded(ScaleExceeded):
    """Canonical labeling requested beyond its supported vertex count."""


class OracleScaleExceeded(ScaleExceeded):
    """A brute-force test oracle was asked to run beyond its tiny budget."""


class PreconditionViolated(TrifreeError):
    """A documented precondition (e.g. independence number at most 2) fails."""


class InvalidColoring(TrifreeError):
    """A coloring is improper, not optimal, or lacks a required singleton."""


class NotMaxDegree(TrifreeError):
    """The distinguished vertex does not attain the maximum degree."""


class InvalidDifference(TrifreeError):
    """A circulant connection set contains a difference outside 1..n//2."""

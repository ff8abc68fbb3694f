"""Exception types shared across the toolkit."""


class GcoalitionError(Exception):
    """Base class for all toolkit errors."""


class GraphFormatError(GcoalitionError):
    """Malformed graph input (edge list or graph6)."""


class DisconnectedError(GcoalitionError):
    """Metric query that is undefined on a disconnected graph."""


class NotATreeError(GcoalitionError):
    """Tree-only operation applied to a graph with a cycle."""


class OverlappingSetsError(GcoalitionError):
    """Pair predicate called with non-disjoint or empty sets."""


class MalformedPartitionError(GcoalitionError):
    """Class list with overlaps, gaps, or empty classes."""


class NotGlobalDominatingError(GcoalitionError):
    """Minimality extraction applied to a non global dominating set."""


class TrivialGraphError(GcoalitionError):
    """Operation undefined on the one-vertex graph."""


class InvalidParamsError(GcoalitionError):
    """Family parameters outside their stated domain."""


class NoKnownFormulaError(GcoalitionError):
    """No closed form is available for this family."""


class NoKnownConstructionError(GcoalitionError):
    """No explicit optimal partition is available for this family."""

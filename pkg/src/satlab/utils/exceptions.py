"""Custom exceptions for satlab."""

from __future__ import annotations

from typing import Any


class SatlabError(Exception):
    """Base exception for satlab."""

    code = "error"


class GrammarError(SatlabError):
    """Text could not be parsed by one of the satlab grammars."""

    code = "grammar"


class InvariantViolation(SatlabError):
    """An internal post-condition check failed."""

    code = "invariant"


# ── Orders ───────────────────────────────────────────────────────────


class OrderError(SatlabError):
    """Failure in the linear-order kernel."""

    code = "order"


class InvalidTerm(OrderError):
    """A term does not belong to its descriptor."""

    code = "invalid_term"


class EmptySet(OrderError):
    """An operation needing a nonempty set received an empty one."""

    code = "empty_set"


class MalformedCut(OrderError):
    """Some lower element of a cut is not below some upper element."""

    code = "malformed_cut"

    def __init__(self, message: str, lower: Any = None, upper: Any = None) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class EmptyOrderBetween(OrderError):
    """No element of the order realizes the cut."""

    code = "empty_between"


class NotDense(OrderError):
    """The descriptor is not a dense order without endpoints."""

    code = "not_dense"


class NotSubset(OrderError):
    """The patched set is not contained in the patching set."""

    code = "not_subset"


class BoundTooSmall(OrderError):
    """The codomain enumeration was truncated before a decision."""

    code = "bound_too_small"


class BaseTooSmall(OrderError):
    """A lexicographic power base needs at least two elements."""

    code = "base_too_small"


class NoSeparatingPoint(OrderError):
    """No room for a separating block in the merged power."""

    code = "no_separating_point"


class MalformedInterval(OrderError):
    """Interval endpoints are not strictly increasing."""

    code = "malformed_interval"


# ── Graphs ───────────────────────────────────────────────────────────


class GraphError(SatlabError):
    """Failure in the graph layer."""

    code = "graph"


class LoopQuery(GraphError):
    """Adjacency of a vertex with itself was queried."""

    code = "loop_query"


class MalformedGraph(GraphError):
    """Edge set violates the undirected graph invariants."""

    code = "malformed_graph"


class MalformedDigraph(GraphError):
    """Arc set violates the digraph invariants (loops or 2-cycles)."""

    code = "malformed_digraph"


class IncompleteOrdering(GraphError):
    """An ordering does not list every vertex exactly once."""

    code = "incomplete_ordering"


class TooLarge(GraphError):
    """Requested instance exceeds the exhaustive limits."""

    code = "too_large"


class NoAdmissibleVertex(GraphError):
    """No vertex satisfies the redirection conditions for a target."""

    code = "no_admissible_vertex"

    def __init__(self, index: int, partial: Any = None) -> None:
        super().__init__(f"no admissible vertex for target {index}")
        self.index = index
        self.partial = partial


# ── Hereditarily finite sets ─────────────────────────────────────────


class HFError(SatlabError):
    """Failure in the hereditarily finite set layer."""

    code = "hf"


class CyclicInput(HFError):
    """A digraph that must be well-founded has a directed cycle."""

    code = "cyclic_input"


class NotExtensional(HFError):
    """Two vertices of a digraph collapse to the same set."""

    code = "not_extensional"


class RealizerFailure(HFError):
    """The realizer has no fresh vertex with the requested out-set."""

    code = "realizer_failure"


# ── Back-and-forth ───────────────────────────────────────────────────


class BackForthError(SatlabError):
    """Failure in the back-and-forth engine."""

    code = "backforth"


class ExtenderExhausted(BackForthError):
    """A presentation could not realize a requested type."""

    code = "extender_exhausted"

    def __init__(self, message: str, partial: Any = None, step: int | None = None) -> None:
        super().__init__(message)
        self.partial = partial
        self.step = step


# ── Boolean algebras ─────────────────────────────────────────────────


class BooleanAlgebraError(SatlabError):
    """Failure in the Boolean algebra layer."""

    code = "boolean_algebra"


class SeparationFailure(BooleanAlgebraError):
    """Lower and upper sets are not strictly separated."""

    code = "separation_failure"

    def __init__(self, message: str, lower: Any = None, upper: Any = None) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper


class Rejected(BooleanAlgebraError):
    """A candidate value does not extend the embedding.

    Carries either the domain pair (lower, upper) whose images the candidate
    violates, or the domain ``atom`` whose image the candidate fails to split.
    """

    code = "rejected"

    def __init__(
        self, message: str, lower: Any = None, upper: Any = None, atom: Any = None
    ) -> None:
        super().__init__(message)
        self.lower = lower
        self.upper = upper
        self.atom = atom

"""Exception hierarchy shared by all hospec modules."""

from __future__ import annotations


class HospecError(Exception):
    """Base class for every error raised by hospec."""


class Graph6Error(HospecError):
    """Malformed graph6 input; ``offset`` is the byte position of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NotATreeError(HospecError):
    """An operation that requires a tree received a non-tree graph."""


class BudgetExceededError(HospecError):
    """A subgraph enumeration produced more items than the configured cap."""

    def __init__(self, budget: int):
        super().__init__(f"enumeration exceeded budget of {budget} subgraphs")
        self.budget = budget


class EigensolverError(HospecError):
    """The numeric eigensolver failed to converge; carries the residual."""

    def __init__(self, message: str, residual: float):
        super().__init__(f"{message} (achieved residual {residual:.3e})")
        self.residual = residual


class SpectralRadiusError(HospecError):
    """A graph fell outside the spectral-radius regime an operation requires."""

    def __init__(self, message: str, radius: float):
        super().__init__(f"{message} (spectral radius {radius:.6f})")
        self.radius = radius

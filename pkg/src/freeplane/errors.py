"""Exception hierarchy shared by all freeplane modules."""


class FreeplaneError(Exception):
    """Base class for all errors raised by this package."""


class StructureError(FreeplaneError):
    """Structurally malformed input: dangling incidence, name clashes, etc."""


class ParseError(FreeplaneError):
    """Malformed JSON input or a name that violates the element grammar."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class NotAPlaneError(FreeplaneError):
    """An operation required plane axioms (A)-(D) and they do not hold."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UniquenessError(StructureError):
    """Two points on two common lines, or two lines through two common points."""


class BudgetError(FreeplaneError):
    """The element budget of an extension run was exceeded."""

    def __init__(self, message, points=0, lines=0, budget=0):
        super().__init__(message)
        self.points = points
        self.lines = lines
        self.budget = budget


class ResourceError(FreeplaneError):
    """A search-space guard (node cap) tripped; partial results may be attached."""

    def __init__(self, message, partial=None, nodes=0):
        super().__init__(message)
        self.partial = partial if partial is not None else []
        self.nodes = nodes


class ContainmentError(FreeplaneError):
    """The first structure is not an induced substructure of the second."""


class NotLengthThreeError(FreeplaneError):
    """A lattice element is neither bottom, top, an atom, nor a coatom."""


class PreconditionError(FreeplaneError):
    """A documented operation precondition failed; carries the witness."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class EncoderError(FreeplaneError):
    """An encoder plugin misbehaved (non-determinism, bad output, crash)."""

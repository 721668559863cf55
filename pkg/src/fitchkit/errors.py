"""Exception types shared across the package.

Every error raised on bad input derives from FitchkitError, so callers
(notably the CLI) can separate usage problems from negative verdicts.
"""


class FitchkitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidToken(FitchkitError):
    """A leaf or color name is empty, has whitespace, or uses a reserved character."""


class DuplicateName(FitchkitError):
    """The same name appears twice in a leaf or color universe."""


class UnknownLeaf(FitchkitError):
    """A leaf name is not part of the leaf universe."""


class UnknownColor(FitchkitError):
    """A color name is not part of the color universe."""


class SelfPair(FitchkitError):
    """A map entry was given for a pair (x, x)."""


class TooFewLeaves(FitchkitError):
    """The operation needs more leaves than the input provides."""


class DegreeViolation(FitchkitError):
    """An inner vertex of a tree has fewer than two children."""


class DuplicateLeaf(FitchkitError):
    """The same leaf name labels two vertices of a tree."""


class EmptyMember(FitchkitError):
    """A set family contains the empty set."""


class DuplicateMember(FitchkitError):
    """A set family contains the same member twice."""


class NotSubsetOfUniverse(FitchkitError):
    """A set family member contains an element outside the universe."""


class NotAHierarchy(FitchkitError):
    """A set family expected to be hierarchy-like is not.

    Carries the offending pair of members as ``violation``.
    """

    def __init__(self, message, violation=None):
        super().__init__(message)
        self.violation = violation


class UniverseMismatch(FitchkitError):
    """Two objects that must share a leaf or color universe do not."""


class TreeDoesNotExplainMap(FitchkitError):
    """The given tree does not derive the given map."""


class InstanceTooLarge(FitchkitError):
    """A brute-force operation was asked to enumerate beyond its size cap."""


class PartNotSubsetOfM(FitchkitError):
    """A recoloring part contains a color outside the map's universe."""


class NotAPartition(FitchkitError):
    """A recoloring scheme declared as a partition does not cover M disjointly."""


class ParseError(FitchkitError):
    """Input text does not match the expected grammar.

    ``position`` is a 0-based character offset into the input and
    ``expected`` says what the parser was looking for there.
    """

    def __init__(self, position, expected, found=None):
        shown = "end of input" if found is None else repr(found)
        super().__init__(
            "parse error at position %d: expected %s, found %s"
            % (position, expected, shown)
        )
        self.position = position
        self.expected = expected
        self.found = found


class UnknownName(FitchkitError):
    """A document refers to a leaf or color not declared in its universe."""


class DuplicateEntry(FitchkitError):
    """A map document lists the same ordered pair twice."""

"""Exception types shared across the package."""


class NilcommError(Exception):
    """Base class for all package errors."""


class DiagramSyntaxError(NilcommError):
    """Malformed diagram text; carries the offending position."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message if position is None else f"{message} (at position {position})")
        self.position = position


class AlternationError(DiagramSyntaxError):
    """Row text does not alternate between the two letters."""


class SizeMismatch(NilcommError):
    """Diagram cell count disagrees with the ambient dimension."""


class SignatureMismatch(NilcommError):
    """Diagram letter counts disagree with the pair signature."""


class ParityViolation(NilcommError):
    """A per-length parity rule fails; records which rule and which length."""

    def __init__(self, rule: str, length: int):
        super().__init__(f"{rule} (length {length})")
        self.rule = rule
        self.length = length


class BoundExceeded(NilcommError):
    """Requested enumeration is larger than the configured bound."""


class EmptyDiagram(NilcommError):
    """Operation needs a nonempty diagram."""


class EvenRowPresent(NilcommError):
    """Column profile is only defined for diagrams with all rows of odd length."""


class ShapeMismatch(NilcommError):
    """Diagrams live in different posets (size, signature or representation)."""


class NotComparable(NilcommError):
    """Reduction queries need strictly comparable diagrams."""


class WrongType(NilcommError):
    """Operation is not defined for this symmetric pair type."""


class UnrealizableDiagram(NilcommError):
    """No sign assignment realizes the diagram as matrices; the diagram is invalid."""


class NoAdjacentLengths(NilcommError):
    """Witness construction needs two rows with lengths differing by one."""


class NotNilpotent(NilcommError):
    """Jordan type is only defined for nilpotent matrices."""


class NotAlmostDistinguished(NilcommError):
    """Test applies only to almost-distinguished, non-distinguished orbits."""


class UnknownCase(NilcommError):
    """Unrecognized exceptional case label."""


class ClaimViolated(NilcommError):
    """A verified-rank-bound claim failed; records the pair and the orbit."""

    def __init__(self, message: str, pair: object = None, orbit: object = None):
        super().__init__(message)
        self.pair = pair
        self.orbit = orbit

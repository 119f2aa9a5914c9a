"""Exception hierarchy.

Every error carries an ``exit_code`` so the CLI can map it without a lookup
table: 1 parse, 2 validation, 3 resource/cap, 4 internal inconsistency.
"""

from __future__ import annotations


class CrossOrderError(Exception):
    exit_code = 2


class ParseError(CrossOrderError):
    exit_code = 1


class ValidationError(CrossOrderError):
    """An input document or value violates a structural invariant."""

    exit_code = 2

    def __init__(self, message: str = "", *witness):
        self.witness = tuple(witness)
        name = type(self).__name__
        if witness:
            at = ",".join(str(w) for w in witness)
            text = f"{name} at ({at})"
        else:
            text = name
        if message:
            text = f"{text}: {message}"
        super().__init__(text)


# group_core
class NoIdentity(ValidationError):
    pass


class NotPermutationTable(ValidationError):
    pass


class NotAssociative(ValidationError):
    pass


class ActionNotHomomorphism(ValidationError):
    pass


class ActionNotTransitive(ValidationError):
    pass


class NotASubgroup(ValidationError):
    pass


# valuation_model
class ShapeMismatch(ValidationError):
    pass


class NotNormalized(ValidationError):
    pass


class NotSValued(ValidationError):
    pass


class CocycleIdentityViolated(ValidationError):
    pass


# classifier
class NotAnOrbit(ValidationError):
    pass


class NotDVR(ValidationError):
    pass


class PrimaryNotAsserted(ValidationError):
    pass


# cohomology
class SetupMismatch(ValidationError):
    pass


class Infeasible(CrossOrderError):
    exit_code = 2


class CapExhausted(CrossOrderError):
    exit_code = 3

    def __init__(self, found: int, wanted: int, attempts: int, partial=()):
        self.found = found
        self.wanted = wanted
        self.partial = list(partial)
        super().__init__(
            f"CapExhausted: {found} of {wanted} cocycles after {attempts} attempts"
        )


# exact_qix
class ZeroElement(ValidationError):
    pass


class NotAUnit(ValidationError):
    pass


class InternalInconsistency(CrossOrderError):
    """Two procedures that must agree on validated input did not."""

    exit_code = 4

    def __init__(self, first: str, second: str, detail: str = ""):
        self.pair = (first, second)
        msg = f"InternalInconsistency between {first} and {second}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


# Raised by graph_of_f on data that is not a genuine cocycle.
class NotWellDefined(InternalInconsistency):
    def __init__(self, detail: str = ""):
        super().__init__("graph_of_f", "coset representatives", detail)


class NotPartialOrder(InternalInconsistency):
    def __init__(self, detail: str = ""):
        super().__init__("graph_of_f", "partial order axioms", detail)


class SubgroupClosureFailure(InternalInconsistency):
    def __init__(self, detail: str = ""):
        super().__init__("compute_H", "subgroup closure", detail)

"""Exception hierarchy.

Errors split into two families so front ends can map them to exit codes:
``ValidationError`` (bad input records, exit 2) and ``InvariantDomainError``
(well-formed input outside the domain of a formula, exit 3).
``AssemblyMismatch`` signals an internal inconsistency between two routes
to the same invariant and should never fire on a correct build.
"""


class EtaBundleError(Exception):
    pass


class ValidationError(EtaBundleError):
    pass


class InvariantDomainError(EtaBundleError):
    pass


class ManifestError(ValidationError):
    """Manifest JSON does not match the expected schema."""


class RiemannRochViolation(ValidationError):
    pass


class CliffordViolation(ValidationError):
    pass


class TrivialBundle(InvariantDomainError):
    """The circle bundle has degree 0."""


class DegenerateReducible(InvariantDomainError):
    """Reducible limit with g - 1 divisible by the degree."""


class UnsupportedSign(InvariantDomainError):
    pass


class ResidueOutOfRange(InvariantDomainError):
    pass


class InvalidModuli(InvariantDomainError):
    pass


class ReducibleEndPresent(InvariantDomainError):
    pass


class MultipleEndsUnsupported(InvariantDomainError):
    pass


class DomainError(InvariantDomainError, ValueError):
    pass


class NegativeValuation(InvariantDomainError, ArithmeticError):
    pass


class DivisionByZero(InvariantDomainError, ZeroDivisionError):
    pass


class AssemblyMismatch(EtaBundleError, AssertionError):
    pass


def exit_code(exc: BaseException) -> int:
    if isinstance(exc, ValidationError):
        return 2
    if isinstance(exc, InvariantDomainError):
        return 3
    return 1

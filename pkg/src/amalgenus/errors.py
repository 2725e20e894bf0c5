# coding=UTF-8
"""Exceptions raised by amalgenus.

Input problems derive from ``ValueError`` and exhausted search budgets from
``RuntimeError`` so callers that only know the builtin types still catch them.
"""


class AmalgenusError(Exception):
    """Base class for every amalgenus exception."""


class InputValidationError(AmalgenusError, ValueError):
    """Input data does not describe what the operation requires."""


class NonAssociative(InputValidationError):
    """A multiplication table fails the associativity check."""


class NoIdentity(InputValidationError):
    """A multiplication table has no two-sided identity."""


class NotLatinSquare(InputValidationError):
    """A row or column of a multiplication table is not a permutation."""


class SizeExceeded(InputValidationError):
    """A group, subgroup lattice or carrier is larger than allowed."""


class NotBijective(InputValidationError):
    """A permutation or action is not a bijection."""


class SubgroupNotInParent(InputValidationError):
    """A subgroup was given together with a group it does not belong to."""


class NotASubgroup(InputValidationError):
    """An element set is not closed under multiplication or inverses."""


class CarrierNotClosed(InputValidationError):
    """A carrier set is not a union of the requested double cosets."""


class ActionNotClosed(InputValidationError):
    """A twisted C2 rule leaves the carrier or is not well defined on it."""


class NotInvolution(InputValidationError):
    """Applying a twisted C2 rule twice does not return the start class."""


class IncompatibleShapes(InputValidationError):
    """Two push-outs do not share (isomorphic) factor and amalgam groups."""


class NotIsomorphicSubgroups(InputValidationError):
    """The two amalgamated subgroups are not isomorphic."""


class FictitiousAmalgam(InputValidationError):
    """The amalgamated subgroup equals one of the factors."""


class NotEmbeddable(InputValidationError):
    """The amalgamated group has no injection into a factor."""


class MissingXi(InputValidationError):
    """A symmetric genus mode was requested without a twist element."""


class InvalidGenusInput(InputValidationError):
    """Out(H)-level genus data violates its containment invariants."""


class SymmetricInputForNonsymmetricBound(InputValidationError):
    """The finite-group genus bound was requested for a symmetric amalgam."""


class SchemaError(InputValidationError):
    """A JSON document does not follow the amalgenus schema."""


class BudgetExceeded(AmalgenusError, RuntimeError):
    """A search ran out of nodes before it could decide its question."""


class InternalInvariantError(AmalgenusError, RuntimeError):
    """An internal invariant failed; this always indicates a bug."""

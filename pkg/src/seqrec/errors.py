"""Exception hierarchy shared across the package.

Every error carries an ``exit_code`` so the CLI can translate failures into
its scriptable contract: 2 = invariant violation, 3 = parse error,
4 = infeasible parameters.
"""

from __future__ import annotations


class SeqrecError(Exception):
    exit_code = 2


class InvariantViolation(SeqrecError):
    """A structural property that the construction guarantees was violated."""

    exit_code = 2


class ParseError(SeqrecError):
    """Malformed input file or text spec."""

    exit_code = 3


class InfeasibleParams(SeqrecError):
    """Requested parameters cannot be satisfied (parity, divisibility, size)."""

    exit_code = 4


# graph
class NotBipartite(SeqrecError):
    exit_code = 4


class NotRegular(SeqrecError):
    exit_code = 4


# groups
class NotSymmetric(SeqrecError):
    exit_code = 4


class ClosureExceedsCap(SeqrecError):
    exit_code = 4


class SearchExhausted(SeqrecError):
    """Generator-set search ran out of candidates; supply a larger group."""

    exit_code = 4


# lift
class GirthNotOdd(SeqrecError):
    exit_code = 4


class GirthNotEven(SeqrecError):
    exit_code = 4


class GroupTooSmall(SeqrecError):
    exit_code = 4


class HalfSetTooSmall(SeqrecError):
    exit_code = 4


class CayleyGirthTooSmall(SeqrecError):
    exit_code = 4


class CompanionDegreeMismatch(SeqrecError):
    exit_code = 4


class CompanionGirthTooSmall(SeqrecError):
    exit_code = 4


# construct
class NotDivisible(SeqrecError):
    exit_code = 4

"""Exception types shared across the package."""


class P2WallsError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(P2WallsError):
    """Malformed textual input (character or rational literal)."""


class NotIntegral(P2WallsError):
    """The requested invariants do not correspond to an integral Chern character."""


class NonPositiveRank(P2WallsError):
    """An operation requiring positive rank was applied to rank <= 0."""


class NoStableCharacter(P2WallsError):
    """No stable character with the requested slope exists under the rank bound."""


class NoAdmissible(P2WallsError):
    """The discriminant scan for a minimal admissible decomposition hit its ceiling."""


class AdmissibilityFailed(P2WallsError):
    """The slope/rank-determined decomposition violates admissibility.

    ``failed`` lists the violated conditions by label ("D1".."D5").
    """

    def __init__(self, failed, message=None):
        self.failed = tuple(failed)
        super().__init__(message or f"admissibility failed: {', '.join(self.failed)}")


class TreeDepthExceeded(P2WallsError):
    """The mutation-tree walk did not locate a hosting interval within the guard depth."""


class DependentCharacters(P2WallsError):
    """Two characters that must be linearly independent are proportional."""


class NoRoot(P2WallsError):
    """The rank-exclusion quadratic has no real root."""


class HeightZeroInput(P2WallsError):
    """The moduli space has Picard rank one; there is no wall-and-ray computation to do."""


class NotSemistableInput(P2WallsError):
    """The input character lies strictly below the stability threshold curve."""


class UnexpectedPositiveChi(P2WallsError):
    """chi(sub, quot) > 0 outside the known sporadic list; surfaced, never patched over."""


class EmptyWallAnomaly(P2WallsError):
    """A candidate destabilizing wall came out empty where a real wall was required."""


class DegenerateRay(P2WallsError):
    """The two orthogonality conditions failed to cut out a negative-rank ray."""


class SearchBudgetExceeded(P2WallsError):
    """The exclusion enumeration ran past its candidate budget.

    ``partial`` holds the violations found before the budget ran out.
    """

    def __init__(self, partial, examined, budget):
        self.partial = list(partial)
        self.examined = examined
        self.budget = budget
        super().__init__(
            f"exclusion search exceeded its budget ({examined} >= {budget} candidates)"
        )

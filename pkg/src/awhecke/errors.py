"""Exception hierarchy shared by all awhecke modules."""


class AwheckeError(Exception):
    """Base class for all library errors."""


class BranchCutError(AwheckeError):
    """Square-root radicand lies on the branch cut (-inf, 0]."""


class NotASquareError(AwheckeError):
    """Exact square root requested of a rational that is not a perfect square."""


class DegenerateParamsError(AwheckeError):
    """Parameter tuple violates a genericity condition required by the operation."""


class DomainError(AwheckeError):
    """Argument outside the domain of a numeric operation (e.g. |q| >= 1)."""


class PoleError(AwheckeError):
    """Evaluation point collides with a pole lattice."""


class PoleInDenominatorError(AwheckeError):
    """A lower parameter of a basic hypergeometric series lies in q^{-Z>=0}."""


class DivergenceError(AwheckeError):
    """Non-terminating series evaluated outside its convergence region."""


class MaxTermsExceeded(AwheckeError):
    """Series or product failed to meet the truncation rule within max_terms."""


class MethodDomainError(AwheckeError):
    """Evaluation method invoked outside its validity region."""


class SingularPointError(AwheckeError):
    """Operator application at a point excluded by the coefficient denominators."""


class ZeroArgumentError(AwheckeError):
    """Laurent polynomial evaluated at z = 0."""


class UnsupportedShiftError(AwheckeError):
    """Gaussian-ratio conjugation met a shift with no rational ratio."""


class RelationFailure(AwheckeError):
    """An algebra relation expected to vanish has a nonzero residual."""

    def __init__(self, relation, residual_terms):
        super().__init__(f"relation {relation!r} has {residual_terms} residual term(s)")
        self.relation = relation
        self.residual_terms = residual_terms


class InternalError(AwheckeError):
    """Internal consistency check failed (a bug, not a user error)."""

"""Exception types shared across the package."""


class SignatureError(ValueError):
    """Malformed or non-hyperbolic signature."""


class GroupSpecError(ValueError):
    """Invalid group specification (bad parameters or unparseable string)."""


class BudgetExceeded(RuntimeError):
    """A search would exceed its configured budget; nothing was truncated."""


class NoSmoothKernel(ValueError):
    """Riemann-Hurwitz gives a non-integral genus for the requested order."""


class LemmaInapplicable(ValueError):
    """The normal Sylow structure argument does not apply at this prime."""


class UnsupportedGroup(ValueError):
    """The requested computation needs irreducibles we do not construct."""


class VerificationError(AssertionError):
    """Two independent derivations of the same quantity disagree."""

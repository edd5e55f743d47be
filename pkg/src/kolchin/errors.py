"""Exception hierarchy shared by the library and the command line."""


class KolchinError(Exception):
    """Base class for all errors raised by this package."""


class InputError(KolchinError, ValueError):
    """Malformed input: bad literal, negative exponent, dimension mismatch."""


class CrossCheckError(KolchinError):
    """Two independent computations of the same quantity disagree."""


class VerificationMismatch(CrossCheckError):
    """An interpolated polynomial failed its held-out sample checks."""


class MethodDisagreement(CrossCheckError):
    """The dimension-polynomial algorithms returned different results."""


class ResourceGuard(KolchinError):
    """A configured resource limit would be exceeded."""


class OracleBudgetExceeded(ResourceGuard):
    """The brute-force enumeration would visit too many lattice points."""


class SubsetBlowup(ResourceGuard):
    """Inclusion-exclusion over too many generators."""

"""Error types shared across the package.

ValueError subclasses mark bad inputs (usage errors); ContractError marks a
violated numerical contract detected at run time.  The CLI maps the former to
exit code 2 and the latter to exit code 3.
"""


class TruncationError(ValueError):
    """Gaussian tail mass beyond the Fock cutoff exceeds the tolerance."""


class SamplingError(ValueError):
    """Time grid too coarse for the requested fast-oscillation analysis."""


class CoverageError(ValueError):
    """Trace or envelope does not cover the requested time span."""


class ContractError(RuntimeError):
    """A numerical contract does not hold (wrong packet kind, failed check)."""

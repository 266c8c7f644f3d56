"""Shared error types.

Parameter errors are plain ValueError throughout the package; the two
classes here mark conditions the command line maps to dedicated exit codes.
"""


class BudgetError(RuntimeError):
    """A search or export would exceed the configured size budget."""


class CounterexampleError(RuntimeError):
    """A guaranteed property failed on concrete data.

    Raised when an exhaustive or randomized check finds a counterexample to
    one of the proven statements this package verifies (an odd cycle inside
    the guaranteed-free range, or a failed two-sided location bound). This
    is never expected to fire; it exists so such a finding aborts loudly
    instead of vanishing into a report.
    """

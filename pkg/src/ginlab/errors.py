"""Shared exception types.

The split mirrors the process exit codes: bad requests are ``ValueError``
(usage), impossible internal states are ``ComputationGuardError`` (arithmetic
guard), and failed cross-checks are ``VerificationFailure``.
"""

from __future__ import annotations


class UnsupportedConfigError(ValueError):
    """The requested operation has no engine for this point configuration."""


class ComputationGuardError(RuntimeError):
    """An internal consistency guard tripped.

    Raised instead of returning a value whenever the engines produce data
    that cannot come from a correct run: non-terminating reductions, parity
    violations in Riemann-Roch, staircase segments that fail to saturate, or
    colength disagreeing with the scheme length.
    """


class VerificationFailure(Exception):
    """A verification or convergence suite found concrete violations."""

    def __init__(self, failures: tuple[str, ...]):
        self.failures = failures
        super().__init__("; ".join(failures))
